"""Catalog of simple wavelet sets for all 17 wallpaper groups at dilation 2.

Every region here is a finite union of convex polygons with exact
coordinates.  The square-lattice sets tile the plane under integer
translation with area exactly 1; the hexagonal sets are transports of
square-lattice sets by the basis-change matrices L and L' and have area
sqrt(3)/2.  ``all_claims`` returns the full machine-checkable claim matrix,
including one deliberately failing combination (p3 with the L'-transport of
the order-4 rhombic-annulus quarter W_pmm, whose half-turn piece is not
compatible with a 3-fold point group).

Single wavelet sets for p1 exist but need constructions outside this
catalog's scope; p1 is covered by the conventional multiwavelet splits
(fig2_diamond_split, fig2_right_split, rhombic4_split).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .exactfield import ZERO, rational
from .geom2d import ConvexPolygon, Mat2, Region, Vec2
from .groups import HEX_TRANSPORT, Z2, group, named_sector, reflection, rotation

__all__ = ["CatalogEntry", "Claim", "KEYS", "build", "all_claims", "check_claim"]


def _c(x):
    return rational(*x) if isinstance(x, tuple) else rational(x)


def _v(x, y) -> Vec2:
    return Vec2(_c(x), _c(y))


def _poly(*pts) -> ConvexPolygon:
    return ConvexPolygon([_v(x, y) for x, y in pts])


def _fan(apex, *outline) -> list[ConvexPolygon]:
    """Fan a simple polygon outline from an apex vertex into triangles.

    Valid only when the outline is star-shaped from the apex; checked by
    requiring every triangle to be convex-positive and the triangle areas to
    sum to the outline's shoelace area.
    """
    apex_v = _v(*apex)
    verts = [_v(x, y) for x, y in outline]
    tris = []
    for i in range(len(verts) - 1):
        tris.append(ConvexPolygon([apex_v, verts[i], verts[i + 1]]))
    total = ZERO
    for t in tris:
        total = total + t.area()
    ring = [apex_v] + verts
    twice = ZERO
    n = len(ring)
    for i in range(n):
        twice = twice + ring[i].cross(ring[(i + 1) % n])
    if (2 * total - abs(twice)).sign() != 0:
        raise ValueError("outline is not star-shaped from the chosen apex")
    return tris


THIRD = rational(1, 3)
TWO_THIRDS = rational(2, 3)

L = HEX_TRANSPORT["L"]
LP = HEX_TRANSPORT["Lp"]


@dataclass(frozen=True)
class CatalogEntry:
    """A named region with the groups and dilation it is claimed for.

    ``parts`` is set on the *_split entries used by multiwavelet claims: the
    region is then the union of the parts.
    """

    key: str
    region: Region
    claimed_group_names: tuple[str, ...]
    claimed_dilation: int
    construction_note: str
    parts: Optional[tuple[Region, ...]] = None


# -- square-lattice building blocks -----------------------------------------


def _w_pm_pieces() -> tuple[ConvexPolygon, ConvexPolygon, ConvexPolygon]:
    return (
        _poly((0, (1, 3)), (0, (2, 3)), (2, 0), (1, 0)),
        _poly((1, 0), (2, 0), ((1, 2), (-1, 2)), (0, (-1, 3))),
        _poly((0, (-1, 3)), (0, (-2, 3)), ((-1, 2), (-1, 2))),
    )


def _region_w_pm() -> Region:
    return Region(_w_pm_pieces())


def _region_w_p2() -> Region:
    p1, p2, p3 = _w_pm_pieces()
    return Region((p1, p2, p3.translate(_v(0, 1))))


def _region_w_cm() -> Region:
    upper = _poly(((2, 3), (2, 3)), ((2, 3), (4, 3)), ((4, 3), (4, 3)))
    lower = _poly(((-2, 3), (-2, 3)), ((-2, 3), (-4, 3)), ((-4, 3), (-4, 3)))
    # the third piece is an L-shaped hexagon; stored as its fan decomposition
    elbow = _fan(
        ((1, 3), (-1, 3)),
        ((-1, 3), (-1, 3)),
        ((-1, 3), (-2, 3)),
        ((2, 3), (-2, 3)),
        ((2, 3), (1, 3)),
        ((1, 3), (1, 3)),
    )
    return Region((upper, lower, *elbow))


def _region_w_pmm() -> Region:
    return Region(
        (
            _poly((0, (2, 3)), (0, 1), ((1, 2), 1), (2, 0), (1, 0)),
            _poly(((-1, 2), -1), (0, -1), (0, (-4, 3))),
        )
    )


def _region_a() -> Region:
    return Region(
        tuple(
            Region.box(2 * j * THIRD, 2 * j * THIRD, 2 * (j + 1) * THIRD, 2 * (j + 1) * THIRD).pieces[0]
            for j in range(3)
        )
    )


def _region_w_p4() -> Region:
    a = _region_a()
    return a.subtract(a.dilate(rational(1, 2)))


def _quarter_triangles() -> tuple[Region, Region]:
    """(upper+lower, left+right) quarter triangles of the unit square."""
    upper = _poly((0, 1), (1, 1), ((1, 2), (1, 2)))
    lower = _poly((0, 0), (1, 0), ((1, 2), (1, 2)))
    left = _poly((0, 0), (0, 1), ((1, 2), (1, 2)))
    right = _poly((1, 0), (1, 1), ((1, 2), (1, 2)))
    return Region((upper, lower)), Region((left, right))


def _w_p4_split() -> tuple[Region, Region]:
    """Split of the first-quadrant set by which quarter triangles of the unit
    square its integer translates fill: (upper/lower part, left/right part).

    Computed constructively by wrapping each piece modulo the integer lattice
    into the unit square, intersecting with the triangles, and translating
    back, so the two halves partition the set exactly.
    """
    ab, lr = _quarter_triangles()
    a_parts: list[ConvexPolygon] = []
    b_parts: list[ConvexPolygon] = []
    unit = Region.box(0, 0, 1, 1)
    for piece in _region_w_p4().pieces:
        x0, y0, x1, y1 = piece.bbox()
        for mx in range(x0.floor(), x1.ceil()):
            for my in range(y0.floor(), y1.ceil()):
                t = _v(mx, my)
                wrapped = Region((piece.translate(-t),)).intersect(unit)
                a_parts.extend(wrapped.intersect(ab).translate(t).pieces)
                b_parts.extend(wrapped.intersect(lr).translate(t).pieces)
    return Region(tuple(a_parts)), Region(tuple(b_parts))


def _region_w_cmm() -> Region:
    a_half, b_half = _w_p4_split()
    return a_half.union(b_half.transform(reflection(Vec2(1, 0))))


def _region_c() -> Region:
    a = _region_a()
    both = a.union(a.translate(_v(2, 2)))
    return both.subtract(both.dilate(rational(1, 2)))


def _region_w_p4m() -> Region:
    return Region(
        (
            _poly((0, (1, 3)), (0, (2, 3)), ((1, 3), (2, 3)), ((1, 3), (1, 3))),
            _poly((1, (2, 3)), (1, 1), ((4, 3), 1), ((4, 3), (2, 3))),
            _poly(((4, 3), 2), ((5, 3), 2), ((5, 3), (5, 3)), ((4, 3), (5, 3))),
            _poly((2, 2), ((8, 3), 2), ((8, 3), (8, 3))),
            _poly(((8, 3), (8, 3)), ((8, 3), (10, 3)), ((10, 3), (10, 3))),
            _poly(((10, 3), (10, 3)), ((10, 3), (11, 3)), ((11, 3), (11, 3))),
            _poly(((11, 3), (11, 3)), (4, 4), (4, (10, 3)), ((11, 3), (10, 3))),
        )
    )


def _region_d() -> Region:
    first_octant = named_sector("first_octant")
    part = first_octant.clip_region(_region_w_p4())
    return part.union(part.transform(rotation(2)))


def _fig2_diamond_parts() -> tuple[Region, Region]:
    w = _region_w_pm()
    return w, w.transform(reflection(Vec2(0, 1)))


def _fig2_right_parts() -> tuple[Region, Region]:
    w = _region_w_cm()
    return w, w.transform(reflection(Vec2(1, 1)))


def _rhombic4_parts() -> tuple[Region, ...]:
    w = _region_w_pmm()
    return tuple(w.transform(s) for s in group("pmm").point_group)


def _union_of(parts) -> Region:
    out = Region.empty()
    for p in parts:
        out = out.union(p)
    return out


# -- registry -----------------------------------------------------------------

_BUILDERS: dict[str, Callable[[], CatalogEntry]] = {}


def _register(key: str):
    def deco(fn: Callable[[], CatalogEntry]):
        _BUILDERS[key] = fn
        return fn

    return deco


@_register("W_pm")
def _build_w_pm() -> CatalogEntry:
    return CatalogEntry(
        "W_pm",
        _region_w_pm(),
        ("pm", "pg"),
        2,
        "half of the diamond annulus chosen so the other half is its mirror "
        "image across the vertical axis; three convex pieces",
    )


@_register("W_p2")
def _build_w_p2() -> CatalogEntry:
    return CatalogEntry(
        "W_p2",
        _region_w_p2(),
        ("p2",),
        2,
        "W_pm with its lower-left triangle translated by (0,1), making the "
        "complementary half the half-turn image",
    )


@_register("W_cm")
def _build_w_cm() -> CatalogEntry:
    return CatalogEntry(
        "W_cm",
        _region_w_cm(),
        ("cm",),
        2,
        "half of the square-frame annulus symmetric across the main diagonal; "
        "two corner triangles plus an elbow stored as a triangle fan",
    )


@_register("W_pmm")
def _build_w_pmm() -> CatalogEntry:
    return CatalogEntry(
        "W_pmm",
        _region_w_pmm(),
        ("pmm", "pmg", "pgg", "p4"),
        2,
        "quarter of the rhombic annulus whose axis reflections generate the "
        "other three quarters",
    )


@_register("A")
def _build_a() -> CatalogEntry:
    return CatalogEntry(
        "A",
        _region_a(),
        (),
        2,
        "three squares of side 2/3 along the main diagonal of the first "
        "quadrant; scaffolding for W_p4 and C",
    )


@_register("W_p4")
def _build_w_p4() -> CatalogEntry:
    return CatalogEntry(
        "W_p4",
        _region_w_p4(),
        ("pmm", "pmg", "pgg", "p4"),
        2,
        "A minus its own half-scale copy; a first-quadrant subspace wavelet "
        "set for dilation 2",
    )


@_register("W_p3")
def _build_w_p3() -> CatalogEntry:
    return CatalogEntry(
        "W_p3",
        _region_w_p4().transform(LP),
        ("p3",),
        2,
        "L'-transport of W_p4 onto the hexagonal lattice",
    )


@_register("W_p6")
def _build_w_p6() -> CatalogEntry:
    return CatalogEntry(
        "W_p6",
        _region_w_pmm().transform(L),
        ("p6",),
        2,
        "L-transport of W_pmm onto the hexagonal lattice",
    )


@_register("W_p4_a")
def _build_w_p4_a() -> CatalogEntry:
    return CatalogEntry(
        "W_p4_a",
        _w_p4_split()[0],
        (),
        2,
        "part of W_p4 whose integer translates fill the upper and lower "
        "quarter triangles of the unit square",
    )


@_register("W_p4_b")
def _build_w_p4_b() -> CatalogEntry:
    return CatalogEntry(
        "W_p4_b",
        _w_p4_split()[1],
        (),
        2,
        "part of W_p4 whose integer translates fill the left and right "
        "quarter triangles of the unit square",
    )


@_register("W_cmm")
def _build_w_cmm() -> CatalogEntry:
    return CatalogEntry(
        "W_cmm",
        _region_w_cmm(),
        ("cmm",),
        2,
        "W_p4_a joined with the x-axis reflection of W_p4_b",
    )


@_register("C")
def _build_c() -> CatalogEntry:
    return CatalogEntry(
        "C",
        _region_c(),
        (),
        2,
        "two diagonal copies of A joined and shaved by their half-scale copy; "
        "a two-fold translation tile of the first quadrant that dilation-2 "
        "tiles it",
    )


@_register("W_p4m")
def _build_w_p4m() -> CatalogEntry:
    return CatalogEntry(
        "W_p4m",
        _region_w_p4m(),
        ("p4m", "p4g"),
        2,
        "seven convex pieces below the main diagonal whose diagonal "
        "reflection completes them to C",
    )


@_register("W_p6m")
def _build_w_p6m() -> CatalogEntry:
    return CatalogEntry(
        "W_p6m",
        _region_w_p4m().transform(L),
        ("p6m",),
        2,
        "L-transport of W_p4m onto the hexagonal lattice",
    )


@_register("D")
def _build_d() -> CatalogEntry:
    return CatalogEntry(
        "D",
        _region_d(),
        (),
        2,
        "first-octant part of W_p4 together with its half-turn copy; a "
        "subspace wavelet set for the first and fifth octants",
    )


@_register("W_p3m1")
def _build_w_p3m1() -> CatalogEntry:
    return CatalogEntry(
        "W_p3m1",
        _region_d().transform(L),
        ("p3m1", "p31m"),
        2,
        "L-transport of D onto the hexagonal lattice",
    )


@_register("fig2_diamond")
def _build_fig2_diamond() -> CatalogEntry:
    parts = _fig2_diamond_parts()
    return CatalogEntry(
        "fig2_diamond",
        _union_of(parts),
        (),
        2,
        "diamond annulus: union of W_pm and its vertical-axis reflection",
    )


@_register("fig2_diamond_split")
def _build_fig2_diamond_split() -> CatalogEntry:
    parts = _fig2_diamond_parts()
    return CatalogEntry(
        "fig2_diamond_split",
        _union_of(parts),
        ("p1",),
        2,
        "the diamond annulus as a conventional 2-wavelet set: W_pm plus its "
        "vertical-axis reflection",
        parts=parts,
    )


@_register("fig2_right")
def _build_fig2_right() -> CatalogEntry:
    parts = _fig2_right_parts()
    return CatalogEntry(
        "fig2_right",
        _union_of(parts),
        (),
        2,
        "square-frame annulus: union of W_cm and its diagonal reflection",
    )


@_register("fig2_right_split")
def _build_fig2_right_split() -> CatalogEntry:
    parts = _fig2_right_parts()
    return CatalogEntry(
        "fig2_right_split",
        _union_of(parts),
        ("p1",),
        2,
        "the square-frame annulus as a conventional 2-wavelet set: W_cm plus "
        "its diagonal reflection",
        parts=parts,
    )


@_register("rhombic4")
def _build_rhombic4() -> CatalogEntry:
    return CatalogEntry(
        "rhombic4",
        _build_fig2_diamond().region.transform(Mat2(1, 0, 0, 2)),
        (),
        2,
        "the diamond annulus stretched by diag(1, 2) into a rhombic annulus; "
        "a conventional 4-fold translation tile",
    )


@_register("rhombic4_split")
def _build_rhombic4_split() -> CatalogEntry:
    parts = _rhombic4_parts()
    return CatalogEntry(
        "rhombic4_split",
        _union_of(parts),
        ("p1",),
        2,
        "the rhombic annulus as a conventional 4-wavelet set: W_pmm and its "
        "three axis reflections",
        parts=parts,
    )


KEYS: tuple[str, ...] = tuple(_BUILDERS)

_CACHE: dict[str, CatalogEntry] = {}


def build(key: str) -> CatalogEntry:
    """Build (and cache) the catalog entry for a key."""
    if key not in _BUILDERS:
        raise KeyError(f"unknown catalog key {key!r}; valid: {', '.join(KEYS)}")
    if key not in _CACHE:
        _CACHE[key] = _BUILDERS[key]()
    return _CACHE[key]


# -- the claim matrix -----------------------------------------------------------


@dataclass(frozen=True)
class Claim:
    """One machine-checkable claim from the catalog.

    kind is "wavelet" (group + single region), "multiwavelet" (group + the
    entry's parts), or "subspace" (sector + lattice, no group).  ``transport``
    optionally applies a hexagonal basis-change matrix to the region first.
    """

    group: Optional[str]
    key: str
    dilation: int = 2
    kind: str = "wavelet"
    expect_pass: bool = True
    transport: Optional[str] = None
    sector_name: Optional[str] = None
    translation_multiplicity: int = 1


def all_claims() -> tuple[Claim, ...]:
    """The full claim matrix covering all 17 groups at dilation 2, plus the
    subspace claims and the recorded negative claim."""
    wavelet_claims = [
        Claim("pm", "W_pm"),
        Claim("pg", "W_pm"),
        Claim("p2", "W_p2"),
        Claim("cm", "W_cm"),
        Claim("pmm", "W_pmm"),
        Claim("pmg", "W_pmm"),
        Claim("pgg", "W_pmm"),
        Claim("p4", "W_pmm"),
        Claim("p6", "W_p6"),
        # the transported quarter-annulus has a half-turn piece, which a
        # 3-fold point group cannot repair: recorded failing combination
        Claim("p3", "W_pmm", transport="Lp", expect_pass=False),
        Claim("pmm", "W_p4"),
        Claim("pmg", "W_p4"),
        Claim("pgg", "W_p4"),
        Claim("p4", "W_p4"),
        Claim("p3", "W_p3"),
        Claim("cmm", "W_cmm"),
        Claim("p4m", "W_p4m"),
        Claim("p4g", "W_p4m"),
        Claim("p6m", "W_p6m"),
        Claim("p3m1", "W_p3m1"),
        Claim("p31m", "W_p3m1"),
    ]
    multi_claims = [
        Claim("p1", "fig2_diamond_split", kind="multiwavelet"),
        Claim("p1", "fig2_right_split", kind="multiwavelet"),
        Claim("p1", "rhombic4_split", kind="multiwavelet"),
    ]
    subspace_claims = [
        Claim(None, "W_p4", kind="subspace", sector_name="first_quadrant"),
        Claim(
            None,
            "C",
            kind="subspace",
            sector_name="first_quadrant",
            translation_multiplicity=2,
        ),
        Claim(None, "D", kind="subspace", sector_name="first_and_fifth_octants"),
    ]
    return tuple(wavelet_claims + multi_claims + subspace_claims)


def claim_region(claim: Claim) -> Region:
    region = build(claim.key).region
    if claim.transport is not None:
        region = region.transform(HEX_TRANSPORT[claim.transport])
    return region


def check_claim(claim: Claim):
    """Run the verifier a claim calls for; returns a WaveletVerdict."""
    from .wavelet import (
        verify_multiwavelet_set,
        verify_subspace_wavelet_set,
        verify_wavelet_set,
    )

    if claim.kind == "wavelet":
        return verify_wavelet_set(group(claim.group), claim_region(claim), claim.dilation)
    if claim.kind == "multiwavelet":
        entry = build(claim.key)
        if entry.parts is None:
            raise ValueError(f"catalog entry {claim.key!r} has no parts")
        return verify_multiwavelet_set(group(claim.group), entry.parts, claim.dilation)
    if claim.kind == "subspace":
        return verify_subspace_wavelet_set(
            claim_region(claim),
            named_sector(claim.sector_name),
            Z2,
            claim.dilation,
            translation_multiplicity=claim.translation_multiplicity,
        )
    raise ValueError(f"unknown claim kind {claim.kind!r}")
