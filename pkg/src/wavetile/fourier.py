"""Numeric Fourier cross-validation of translation tilings.

A bounded set of area equal to the lattice covolume tiles the plane under
the lattice exactly when the Fourier transform of its indicator vanishes on
every nonzero point of the dual lattice.  This module evaluates that
criterion numerically: the transform of a polygon indicator reduces, by the
divergence theorem, to a sum over edges

    F(xi) = sum_edges  i <xi, perp(b - a)> / (2 pi |xi|^2)
            * exp(-2 pi i <mid, xi>) * sinc(<b - a, xi>)

with perp(v) = (v_y, -v_x), mid the edge midpoint, and
sinc(u) = sin(pi u)/(pi u).  Checking is cut off at a finite radius, so the
verdict is advisory; the exact geometric verifier is authoritative, and the
test suite asserts the two agree on the whole catalog.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .geom2d import Region
from .groups import Lattice

__all__ = [
    "FourierCheckReport",
    "ft_indicator",
    "closed_form_A_hat",
    "closed_form_halfA_hat",
    "fourier_tiling_check",
]

_SINC_SERIES_CUTOFF = 1e-12


@dataclass(frozen=True)
class FourierCheckReport:
    """Numeric tiling report: max |transform| over the checked nonzero dual
    lattice points, plus the deviation of the zero-frequency value (the
    area) from the lattice covolume."""

    max_abs_value: float
    points_checked: int
    radius: float
    tolerance: float
    passed: bool
    area_deviation: float

    def to_obj(self) -> dict:
        return {
            "schema": "fourier-report/1",
            "passed": self.passed,
            "max_abs_value": self.max_abs_value,
            "points_checked": self.points_checked,
            "radius": self.radius,
            "tolerance": self.tolerance,
            "area_deviation": self.area_deviation,
        }


def _sinc(u: np.ndarray) -> np.ndarray:
    """sin(pi u)/(pi u) with a series fallback near u = 0."""
    small = np.abs(u) < _SINC_SERIES_CUTOFF
    safe = np.where(small, 1.0, u)
    direct = np.sin(np.pi * safe) / (np.pi * safe)
    series = 1.0 - (np.pi * u) ** 2 / 6.0
    return np.where(small, series, direct)


def ft_points(region: Region, pts: np.ndarray) -> np.ndarray:
    """Transform of the region's indicator at an (N, 2) array of points.

    The value at the origin is the region's area.
    """
    pts = np.asarray(pts, dtype=float)
    x = pts[:, 0]
    y = pts[:, 1]
    norm2 = x * x + y * y
    at_zero = norm2 == 0.0
    norm2_safe = np.where(at_zero, 1.0, norm2)
    out = np.zeros(len(pts), dtype=complex)
    for piece in region.pieces:
        verts = [v.to_floats() for v in piece.vertices]
        n = len(verts)
        for i in range(n):
            ax, ay = verts[i]
            bx, by = verts[(i + 1) % n]
            ex, ey = bx - ax, by - ay
            mx, my = (ax + bx) / 2.0, (ay + by) / 2.0
            u = ex * x + ey * y
            w = ey * x - ex * y  # <xi, perp(edge)>
            phase = np.exp(-2j * np.pi * (mx * x + my * y))
            out += (1j * w / (2.0 * np.pi * norm2_safe)) * phase * _sinc(u)
    if at_zero.any():
        out[at_zero] = region.area().to_float()
    return out


def ft_indicator(region: Region, xi: tuple[float, float]) -> complex:
    """Transform of the region's indicator at one frequency point."""
    return complex(ft_points(region, np.array([xi], dtype=float))[0])


def _side_factor(side: float, t: int) -> complex:
    """1-D transform of the interval [0, side) at integer frequency t."""
    if t == 0:
        return complex(side)
    return cmath.exp(-1j * math.pi * side * t) * math.sin(math.pi * side * t) / (math.pi * t)


def _diagonal_squares_hat(side: float, k: int, ell: int) -> complex:
    """Closed-form transform of three squares of the given side whose corners
    sit at (j*side, j*side) for j = 0, 1, 2: a product of two 1-D interval
    factors times a three-term corner phase sum that vanishes unless
    k + ell is divisible by 3."""
    if k == 0 and ell == 0:
        raise ValueError("closed form is for nonzero frequencies; the value at 0 is the area")
    corner_sum = sum(
        cmath.exp(-2j * math.pi * j * side * (k + ell)) for j in range(3)
    )
    return _side_factor(side, k) * _side_factor(side, ell) * corner_sum


def closed_form_A_hat(k: int, ell: int) -> complex:
    """Closed-form transform of the diagonal three-square set A (side 2/3).

    When one index is zero the corresponding factor degenerates to the 1-D
    interval value; (0, 0) is rejected.
    """
    return _diagonal_squares_hat(2.0 / 3.0, k, ell)


def closed_form_halfA_hat(k: int, ell: int) -> complex:
    """Closed-form transform of (1/2) A: the same shape at side 1/3."""
    return _diagonal_squares_hat(1.0 / 3.0, k, ell)


def fourier_tiling_check(
    region: Region,
    lattice: Lattice,
    radius: float = 20.0,
    tol: float = 1e-9,
) -> FourierCheckReport:
    """Evaluate the indicator transform at every nonzero dual-lattice point
    within the radius; pass iff all magnitudes are <= tol and the area equals
    the lattice covolume within tol."""
    dual = lattice.dual()
    u1 = np.array(dual.v1.to_floats())
    u2 = np.array(dual.v2.to_floats())
    # m = <xi, v1>, n = <xi, v2>, so |m| <= radius |v1| and |n| <= radius |v2|
    n_m = math.ceil(radius * math.hypot(*lattice.v1.to_floats())) + 1
    n_n = math.ceil(radius * math.hypot(*lattice.v2.to_floats())) + 1
    ms, ns = np.meshgrid(np.arange(-n_m, n_m + 1), np.arange(-n_n, n_n + 1))
    ms = ms.ravel()
    ns = ns.ravel()
    pts = ms[:, None] * u1[None, :] + ns[:, None] * u2[None, :]
    keep = (pts[:, 0] ** 2 + pts[:, 1] ** 2 <= radius * radius) & ~(
        (ms == 0) & (ns == 0)
    )
    pts = pts[keep]
    values = ft_points(region, pts)
    max_abs = float(np.max(np.abs(values))) if len(values) else 0.0
    area_dev = abs(region.area().to_float() - lattice.covolume().to_float())
    return FourierCheckReport(
        max_abs_value=max_abs,
        points_checked=int(len(pts)),
        radius=float(radius),
        tolerance=float(tol),
        passed=bool(max_abs <= tol and area_dev <= tol),
        area_deviation=area_dev,
    )
