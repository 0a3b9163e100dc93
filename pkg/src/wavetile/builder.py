"""Iterative scaling-set construction, truncated with exact deficit bounds.

The classic instance starts from the square [0, 1/3)^2 and repeatedly scales
by 1/3 and translates by (1/3, 1/3); the limit E of the union is a scaling
set whose residue 3E \\ E is a subspace wavelet set for the first quadrant
under dilation by 3.  Exact arithmetic cannot hold the infinite union, so
the builder produces the depth-n truncation E_n and reports the deficit
instead of hiding it: for the classic instance the truncated residue
W_n = 3 E_n \\ E_n has area 1 - 9^-n, so its translation-tiling check fails
with uncovered area exactly 9^-n, a quantitative convergence certificate.

The construction is exposed for general (d, seed, step); only the classic
instance carries verified claims.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactfield import rational
from .geom2d import Mat2, Region, Vec2
from .groups import HEX_TRANSPORT

__all__ = ["IterationSpec", "classic_spec", "scaling_set", "wavelet_from_scaling", "transport"]


@dataclass(frozen=True)
class IterationSpec:
    """Parameters of the iteration: level-0 seed region, per-level contraction
    1/d and translation step, truncation depth >= 1."""

    d: int
    seed: Region
    step: Vec2
    depth: int

    def __post_init__(self):
        if self.d < 2:
            raise ValueError("dilation must be an integer >= 2")
        if self.depth < 1:
            raise ValueError("depth must be >= 1")
        if self.seed.is_empty:
            raise ValueError("seed region must be nonempty")


def classic_spec(depth: int, d: int = 3) -> IterationSpec:
    """Corner-square instance: seed [0, 1/d)^2, step (1/d, 1/d)."""
    inv = rational(1, d)
    return IterationSpec(
        d=d,
        seed=Region.box(0, 0, inv, inv),
        step=Vec2(inv, inv),
        depth=depth,
    )


def scaling_set(spec: IterationSpec) -> Region:
    """Depth-n truncation E_n = seed ∪ ((1/d) E_(n-1) + step).

    The result is checked to satisfy the scaling-set property E ⊆ d E, which
    the residue construction relies on.
    """
    inv = rational(1, spec.d)
    e = spec.seed
    for _ in range(spec.depth - 1):
        e = spec.seed.union(e.dilate(inv).translate(spec.step))
    if not e.subtract(e.dilate(spec.d)).area().sign() == 0:
        raise ValueError("spec violates the scaling-set property E ⊆ dE")
    return e


def wavelet_from_scaling(spec: IterationSpec) -> Region:
    """Truncated residue W_n = d E_n \\ E_n."""
    e = scaling_set(spec)
    return e.dilate(spec.d).subtract(e)


def transport(key: str, region: Region) -> Region:
    """Apply one of the hexagonal basis-change matrices ("L" or "Lp")."""
    try:
        m: Mat2 = HEX_TRANSPORT[key]
    except KeyError:
        raise KeyError(f"unknown transport {key!r}; valid: L, Lp") from None
    return region.transform(m)
