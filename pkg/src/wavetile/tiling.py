"""Exact verifiers for translation tilings and dilation tilings.

Translation tiling with multiplicity k is decided on the half-open
fundamental parallelogram of the lattice: every piece is wrapped modulo the
lattice into the parallelogram and inserted into a coverage arrangement, a
partition of the domain into convex cells each carrying a hit count.  The
verdict is exact; boundaries never matter because counting is by area.

Dilation tiling by d is reduced to the same kind of finite coverage check on
the polygonal fundamental domain Q = (d H) \\ H with H = [-1/2, 1/2)^2: since
H is contained in d H and shrinks to the origin under repeated division by
d, the integer dilates of Q partition the punctured plane, so a bounded
region U (whose closure avoids the origin) tiles under dilation with
multiplicity k exactly when the rescaled copies d^-j U cover Q with
multiplicity k.  Only finitely many j can touch Q; the window is bounded
through the exact outer radius and origin distance of each piece.  When a
sector M is given, Q is replaced by its intersection with M (sectors are
dilation invariant).  This wrap-reduction is this artifact's own
construction; it is cross-validated against the independent Fourier
criterion in the test suite.

A region whose closure meets the origin with a positive-angle cone can never
dilation-tile: arbitrarily deep rescalings keep covering the cone, so the
multiplicity is unbounded there.  Such input produces an early failure whose
witness carries the sentinel multiplicity UNBOUNDED.  If the cones of the
offending pieces cover a full circle the origin is interior to the region,
which is rejected as a precondition error instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from .exactfield import Rational, Scalar, rational
from .geom2d import ConvexPolygon, Region, Sector, Vec2
from .groups import Lattice

__all__ = [
    "UNBOUNDED",
    "TilingReport",
    "verify_translation_tiling",
    "verify_dilation_tiling",
    "verify_pairwise_disjoint",
    "sector_contains",
]

# sentinel observed-multiplicity for "grows without bound" defects
UNBOUNDED = -1


@dataclass(frozen=True)
class TilingReport:
    """Outcome of a tiling check.

    ``defect_regions`` lists (region, observed multiplicity) for every
    observed multiplicity different from the target; ``passed`` is true iff
    it is empty.  ``classes`` carries the full coverage partition by observed
    multiplicity (including the target class) when the check ran the
    coverage arrangement; the class regions then partition
    ``checked_domain`` exactly.
    """

    passed: bool
    multiplicity_target: int
    defect_regions: tuple[tuple[Region, int], ...]
    checked_domain: Region
    classes: Optional[Mapping[int, Region]] = None
    note: str = ""

    def to_obj(self) -> dict:
        from .regionio import region_to_obj

        out = {
            "schema": "tiling-report/1",
            "passed": self.passed,
            "multiplicity_target": self.multiplicity_target,
            "checked_domain_area": self.checked_domain.area().to_text(),
            "defects": [
                {
                    "multiplicity": m,
                    "area": r.area().to_text(),
                    "area_float": r.area().to_float(),
                    "region": region_to_obj(r, bare=True),
                }
                for r, m in self.defect_regions
            ],
        }
        if self.note:
            out["note"] = self.note
        return out


class _Coverage:
    """Partition of a base region into convex cells with hit counts.

    Inserting a polygon splits every cell it overlaps into the covered part
    (count + 1) and the uncovered remainder.  Insertion order is the caller's
    iteration order, so results are deterministic.
    """

    __slots__ = ("cells",)

    def __init__(self, base: Region):
        self.cells: list[tuple[ConvexPolygon, int]] = [(p, 0) for p in base.pieces]

    def insert(self, piece: ConvexPolygon) -> None:
        out: list[tuple[ConvexPolygon, int]] = []
        for cell, count in self.cells:
            inside, outside = cell.split_by(piece)
            if inside is None:
                out.append((cell, count))
                continue
            out.append((inside, count + 1))
            out.extend((r, count) for r in outside)
        self.cells = out

    def classes(self) -> dict[int, Region]:
        by_count: dict[int, list[ConvexPolygon]] = {}
        for cell, count in self.cells:
            by_count.setdefault(count, []).append(cell)
        return {count: Region(cells) for count, cells in sorted(by_count.items())}


def _report_from_classes(
    classes: Mapping[int, Region],
    k: int,
    domain: Region,
    note: str = "",
) -> TilingReport:
    defects = tuple((r, m) for m, r in classes.items() if m != k)
    return TilingReport(
        passed=not defects,
        multiplicity_target=k,
        defect_regions=defects,
        checked_domain=domain,
        classes=dict(classes),
        note=note,
    )


def verify_translation_tiling(region: Region, lattice: Lattice, k: int = 1) -> TilingReport:
    """Check that the region covers the plane with multiplicity k under
    translation by the lattice, exactly.

    The check runs in lattice coordinates: each piece is translated by every
    integer vector that can bring it over the half-open unit square (a finite
    set found from its bounding box), the overlap is clipped in, and the
    final coverage must be k on every cell.  Regions in this package are
    always bounded, so the enumeration is finite.
    """
    if k < 1:
        raise ValueError("multiplicity must be a positive integer")
    binv = lattice.inverse_basis_matrix()
    basis = lattice.basis_matrix()
    unit = ConvexPolygon([Vec2(0, 0), Vec2(1, 0), Vec2(1, 1), Vec2(0, 1)])
    cov = _Coverage(Region((unit,)))
    for piece in region.pieces:
        p = piece.transform(binv)
        x0, y0, x1, y1 = p.bbox()
        for mx in range(x0.floor(), x1.ceil()):
            for my in range(y0.floor(), y1.ceil()):
                cov.insert(p.translate(Vec2(-mx, -my)))
    classes = {m: r.transform(basis) for m, r in cov.classes().items()}
    domain = Region((unit,)).transform(basis)
    return _report_from_classes(classes, k, domain)


def _same_direction(u: Vec2, v: Vec2) -> bool:
    return u.cross(v).sign() == 0 and u.dot(v).sign() > 0


def _wedges_cover_circle(wedges: Sequence[tuple[Vec2, Vec2]]) -> bool:
    """Whether closed angular arcs (each of span <= pi) cover the circle.

    The arcs cover the circle iff past every arc end some arc keeps going:
    for each end direction there must be an arc that contains it strictly
    before its own end.
    """
    if not wedges:
        return False

    def contains_dir(w: tuple[Vec2, Vec2], e: Vec2) -> bool:
        lo, hi = w
        return lo.cross(e).sign() >= 0 and hi.cross(e).sign() <= 0

    for _, hi in wedges:
        if not any(
            contains_dir(w, hi) and not _same_direction(w[1], hi) for w in wedges
        ):
            return False
    return True


def _wedge_region(lo: Vec2, hi: Vec2, base: Region) -> Region:
    """base clipped to the closed cone between directions lo and hi."""
    o = Vec2(0, 0)
    out = []
    for p in base.pieces:
        q = p.clip_halfplane(o, lo, keep_nonneg=True)
        if q is not None:
            q = q.clip_halfplane(o, hi, keep_nonneg=False)
        if q is not None:
            out.append(q)
    return Region(out)


def _dilation_base(
    d: int, inner_cell: Optional[ConvexPolygon], sector: Optional[Sector]
) -> tuple[Region, ConvexPolygon]:
    if inner_cell is None:
        h = rational(1, 2)
        inner_cell = ConvexPolygon(
            [Vec2(-h, -h), Vec2(h, -h), Vec2(h, h), Vec2(-h, h)]
        )
    origin = Vec2(0, 0)
    for a, b in inner_cell.edges():
        if (b - a).cross(origin - a).sign() <= 0:
            raise ValueError("inner cell must contain the origin in its interior")
    scaled = inner_cell.scale(d)
    if not all(scaled.contains(v) for v in inner_cell.vertices):
        raise ValueError("inner cell must be contained in its own d-fold dilate")
    base = Region((scaled,)).subtract(Region((inner_cell,)))
    if sector is not None and not sector.is_whole_plane:
        base = sector.clip_region(base)
    return base, inner_cell


def verify_dilation_tiling(
    region: Region,
    d: int,
    k: int = 1,
    sector: Optional[Sector] = None,
    inner_cell: Optional[ConvexPolygon] = None,
) -> TilingReport:
    """Check that the region covers the plane (or the sector) with
    multiplicity k under integer powers of dilation by d, exactly.

    ``inner_cell`` overrides the default H = [-1/2, 1/2)^2; any convex
    polygon with the origin interior and H contained in d*H yields the same
    verdict, which the test suite exercises.
    """
    if d < 2:
        raise ValueError("dilation must be an integer >= 2")
    if k < 1:
        raise ValueError("multiplicity must be a positive integer")
    if sector is not None and not sector_contains(sector, region):
        raise ValueError("region is not contained in the sector")

    base, inner = _dilation_base(d, inner_cell, sector)

    origin = Vec2(0, 0)
    touching = [
        p for p in region.pieces if p.squared_distance_to_origin().sign() == 0
    ]
    if any(p.contains_interior(origin) for p in touching):
        raise ValueError("origin is interior to the region")
    if touching:
        wedges = [p.origin_tangent_wedge() for p in touching]
        if _wedges_cover_circle(wedges):
            raise ValueError("origin is interior to the region")
        lo, hi = wedges[0]
        witness = _wedge_region(lo, hi, base)
        if witness.is_empty:
            witness = Region((touching[0],))
        return TilingReport(
            passed=False,
            multiplicity_target=k,
            defect_regions=((witness, UNBOUNDED),),
            checked_domain=base,
            classes=None,
            note=(
                "a piece meets the origin with a positive-angle cone, so the "
                "dilation multiplicity is unbounded near it"
            ),
        )

    # exact j-window per piece: d^-j P can overlap the base domain only while
    # it pokes out of the inner cell and reaches no farther than d * R_out(H)
    rho_in_sq = inner.boundary_squared_distance_to_origin()
    big_r_sq = inner.max_squared_radius()
    dd: Rational = rational(d * d)
    d2_big_r_sq = Scalar(rational(d * d)) * big_r_sq

    cov = _Coverage(base)
    for piece in region.pieces:
        r_out_sq = piece.max_squared_radius()
        r_in_sq = piece.squared_distance_to_origin()
        a_bound = r_out_sq / rho_in_sq
        b_bound = r_in_sq / d2_big_r_sq
        j_hi = 0
        if Scalar(dd**j_hi) < a_bound:
            while Scalar(dd ** (j_hi + 1)) < a_bound:
                j_hi += 1
        else:
            while j_hi > -10_000 and not Scalar(dd**j_hi) < a_bound:
                j_hi -= 1
        j_lo = 0
        if Scalar(dd**j_lo) > b_bound:
            while Scalar(dd ** (j_lo - 1)) > b_bound:
                j_lo -= 1
        else:
            while j_lo < 10_000 and not Scalar(dd**j_lo) > b_bound:
                j_lo += 1
        for j in range(j_lo, j_hi + 1):
            scale = rational(1, d**j) if j >= 0 else rational(d ** (-j))
            cov.insert(piece.scale(scale))

    return _report_from_classes(cov.classes(), k, base)


def verify_pairwise_disjoint(regions: Sequence[Region]) -> TilingReport:
    """Check that all pairwise intersections have zero area (shared edges
    pass).  Every overlapping pair contributes one defect with observed
    multiplicity 2."""
    defects: list[tuple[Region, int]] = []
    for i in range(len(regions)):
        for j in range(i + 1, len(regions)):
            overlap = regions[i].intersect(regions[j])
            if overlap.area().sign() > 0:
                defects.append((overlap, 2))
    return TilingReport(
        passed=not defects,
        multiplicity_target=1,
        defect_regions=tuple(defects),
        checked_domain=Region.empty(),
        classes=None,
        note="pairwise measure-disjointness check",
    )


def sector_contains(sector: Sector, region: Region) -> bool:
    """True iff the region minus the sector has zero area."""
    return sector.contains_region(region)
