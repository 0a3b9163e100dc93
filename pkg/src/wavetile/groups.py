"""The 17 plane crystallographic (wallpaper) groups.

Each group is built from a small generator list: two independent lattice
translations plus point-group elements and, for the four non-symmorphic
groups (pg, pmg, pgg, p4g), glide reflections.  The point group and the
coset-vector table are derived by closing the generators in the quotient by
the translation lattice.

Dilation compatibility.  Conjugating an element [x, S] by the dilation
operator f(z) -> d f(dz) gives [d x, S] (the orthogonal part is untouched and
the translation part scales by d, since scalar dilation commutes with S).
With x = l + c_S, closure of the group under this conjugation is therefore
equivalent to (d - 1) c_S lying in the lattice for every point-group element
S, which is the test implemented by :func:`compatible`.
"""

from __future__ import annotations

from typing import Mapping, Optional, Sequence

from .exactfield import HALF, Rational, Scalar, rational
from .geom2d import Isometry, Mat2, Region, Sector, Vec2, Wedge

__all__ = [
    "Lattice",
    "WallpaperGroup",
    "GROUP_NAMES",
    "SECTOR_NAMES",
    "Z2",
    "HEX",
    "HEX_TRANSPORT",
    "rotation",
    "reflection",
    "build_group",
    "group",
    "member",
    "compatible",
    "dual_lattice",
    "orbit",
    "named_sector",
    "canonical_sector",
]


class Lattice:
    """Full-rank translation lattice spanned by basis vectors v1, v2."""

    __slots__ = ("v1", "v2", "_basis", "_inv")

    def __init__(self, v1: Vec2, v2: Vec2):
        b = Mat2.from_columns(v1, v2)
        if b.det().sign() == 0:
            raise ValueError("lattice basis must be linearly independent")
        self.v1 = v1
        self.v2 = v2
        self._basis = b
        self._inv = b.inverse()

    def basis_matrix(self) -> Mat2:
        """Columns are the basis vectors."""
        return self._basis

    def inverse_basis_matrix(self) -> Mat2:
        return self._inv

    def covolume(self) -> Scalar:
        return abs(self._basis.det())

    def coords(self, p: Vec2) -> Vec2:
        """Coordinates of p in the lattice basis."""
        return self._inv.matvec(p)

    def from_coords(self, c: Vec2) -> Vec2:
        return self._basis.matvec(c)

    def contains(self, p: Vec2) -> bool:
        c = self.coords(p)
        return _is_integer(c.x) and _is_integer(c.y)

    def reduce(self, p: Vec2) -> Vec2:
        """Representative of p modulo the lattice, with coordinates in [0,1)."""
        c = self.coords(p)
        frac = Vec2(c.x - c.x.floor(), c.y - c.y.floor())
        return self.from_coords(frac)

    def dual(self) -> "Lattice":
        """Basis (u1, u2) with <u_i, v_j> = delta_ij exactly."""
        u = self._inv.transpose()
        return Lattice(Vec2(u.a, u.c), Vec2(u.b, u.d))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Lattice):
            return NotImplemented
        return self.v1 == other.v1 and self.v2 == other.v2

    def __hash__(self) -> int:
        return hash((self.v1, self.v2))

    def same_lattice(self, other: "Lattice") -> bool:
        """True when both bases span the same point set."""
        return (
            self.contains(other.v1)
            and self.contains(other.v2)
            and other.contains(self.v1)
            and other.contains(self.v2)
        )

    def __repr__(self) -> str:
        return f"Lattice({self.v1!r}, {self.v2!r})"


def _is_integer(s: Scalar) -> bool:
    return s.b == 0 and s.a.denominator == 1


Z2 = Lattice(Vec2(1, 0), Vec2(0, 1))
HEX = Lattice(Vec2(1, 0), Vec2(HALF, Scalar(0, rational(1, 2))))

# basis-change matrices onto the hexagonal lattice; the second transports a
# square-lattice tiling to a mirror-image hexagonal arrangement
HEX_TRANSPORT: Mapping[str, Mat2] = {
    "L": Mat2(1, HALF, 0, Scalar(0, rational(1, 2))),
    "Lp": Mat2(1, -HALF, 0, Scalar(0, rational(1, 2))),
}


def rotation(n: int) -> Mat2:
    """Counterclockwise rotation by 2*pi/n for n in {1, 2, 3, 4, 6}."""
    half_r3 = Scalar(0, rational(1, 2))
    table = {
        1: Mat2(1, 0, 0, 1),
        2: Mat2(-1, 0, 0, -1),
        3: Mat2(-HALF, -half_r3, half_r3, -HALF),
        4: Mat2(0, -1, 1, 0),
        6: Mat2(HALF, -half_r3, half_r3, HALF),
    }
    try:
        return table[n]
    except KeyError:
        raise ValueError(f"no crystallographic rotation of order {n}") from None


def reflection(v: Vec2) -> Mat2:
    """Reflection across the line through the origin spanned by v."""
    if v.is_zero():
        raise ValueError("reflection axis must be nonzero")
    n2 = v.norm_sq()
    return Mat2(
        (v.x * v.x - v.y * v.y) / n2,
        2 * v.x * v.y / n2,
        2 * v.x * v.y / n2,
        (v.y * v.y - v.x * v.x) / n2,
    )


def _tau(x, y) -> Isometry:
    return Isometry.translation(Vec2(x, y))


def _lin(m: Mat2) -> Isometry:
    return Isometry.linear(m)


def _glide(t: Vec2, m: Mat2) -> Isometry:
    return Isometry(t, m)


_SQ_TRANSLATIONS = (_tau(1, 0), _tau(0, 1))
_HEX_TRANSLATIONS = (_tau(1, 0), Isometry.translation(HEX.v2))

_GENERATORS: dict[str, tuple[Lattice, tuple[Isometry, ...]]] = {
    "p1": (Z2, _SQ_TRANSLATIONS),
    "p2": (Z2, _SQ_TRANSLATIONS + (_lin(rotation(2)),)),
    "pm": (Z2, _SQ_TRANSLATIONS + (_lin(reflection(Vec2(0, 1))),)),
    "pg": (Z2, _SQ_TRANSLATIONS + (_glide(Vec2(0, HALF), reflection(Vec2(0, 1))),)),
    "pmm": (Z2, _SQ_TRANSLATIONS + (_lin(rotation(2)), _lin(reflection(Vec2(0, 1))))),
    "pmg": (
        Z2,
        _SQ_TRANSLATIONS
        + (_lin(rotation(2)), _glide(Vec2(0, HALF), reflection(Vec2(0, 1)))),
    ),
    "pgg": (
        Z2,
        _SQ_TRANSLATIONS
        + (_lin(rotation(2)), _glide(Vec2(HALF, HALF), reflection(Vec2(0, 1)))),
    ),
    "p4": (Z2, _SQ_TRANSLATIONS + (_lin(rotation(4)),)),
    "p4m": (Z2, _SQ_TRANSLATIONS + (_lin(rotation(4)), _lin(reflection(Vec2(1, 1))))),
    "p4g": (
        Z2,
        _SQ_TRANSLATIONS
        + (_lin(rotation(4)), _glide(Vec2(HALF, HALF), reflection(Vec2(1, 1)))),
    ),
    "cm": (Z2, _SQ_TRANSLATIONS + (_lin(reflection(Vec2(1, 1))),)),
    "cmm": (Z2, _SQ_TRANSLATIONS + (_lin(rotation(2)), _lin(reflection(Vec2(1, 1))))),
    "p3": (HEX, _HEX_TRANSLATIONS + (_lin(rotation(3)),)),
    "p31m": (HEX, _HEX_TRANSLATIONS + (_lin(rotation(3)), _lin(reflection(Vec2(1, 0))))),
    "p3m1": (HEX, _HEX_TRANSLATIONS + (_lin(rotation(3)), _lin(reflection(Vec2(0, 1))))),
    "p6": (HEX, _HEX_TRANSLATIONS + (_lin(rotation(6)),)),
    "p6m": (
        HEX,
        _HEX_TRANSLATIONS
        + (_lin(rotation(6)), _lin(reflection(Vec2(Scalar(0, rational(1, 2)), HALF)))),
    ),
}

GROUP_NAMES: tuple[str, ...] = tuple(_GENERATORS)

_POINT_GROUP_ORDERS = {
    "p1": 1,
    "p2": 2,
    "pm": 2,
    "pg": 2,
    "pmm": 4,
    "pmg": 4,
    "pgg": 4,
    "p4": 4,
    "p4m": 8,
    "p4g": 8,
    "cm": 2,
    "cmm": 4,
    "p3": 3,
    "p31m": 6,
    "p3m1": 6,
    "p6": 6,
    "p6m": 12,
}


class WallpaperGroup:
    """A wallpaper group with derived point group and coset-vector table.

    ``coset_table`` maps each point-group matrix S to the unique translation
    part c_S modulo the lattice that occurs with S, reduced to the half-open
    fundamental parallelogram; c_I = 0.  A group is symmorphic exactly when
    all coset vectors vanish.
    """

    __slots__ = ("name", "lattice", "generators", "point_group", "coset_table")

    def __init__(
        self,
        name: str,
        lattice: Lattice,
        generators: Sequence[Isometry],
        point_group: Sequence[Mat2],
        coset_table: Mapping[Mat2, Vec2],
    ):
        self.name = name
        self.lattice = lattice
        self.generators = tuple(generators)
        self.point_group = tuple(point_group)
        self.coset_table = dict(coset_table)

    @property
    def is_symmorphic(self) -> bool:
        return all(c.is_zero() for c in self.coset_table.values())

    def __repr__(self) -> str:
        return f"WallpaperGroup({self.name}, |B|={len(self.point_group)})"


def _close_quotient(
    generators: Sequence[Isometry], lattice: Lattice
) -> tuple[list[Mat2], dict[Mat2, Vec2]]:
    """Close the generators in the quotient by the lattice.

    Elements of the quotient are pairs (S, c mod lattice); multiplication is
    inherited from the isometry product.  For a wallpaper group each matrix S
    occurs with exactly one coset vector, which is checked.
    """
    for g in generators:
        if not g.m.is_orthogonal():
            raise ValueError("generator matrix parts must be orthogonal")
        # point-group elements must preserve the lattice for reduction to
        # commute with multiplication
        if not (lattice.contains(g.m.matvec(lattice.v1)) and lattice.contains(g.m.matvec(lattice.v2))):
            raise ValueError("generator matrix does not preserve the lattice")

    ident = Mat2.identity()
    table: dict[Mat2, Vec2] = {ident: Vec2(0, 0)}
    order: list[Mat2] = [ident]
    frontier: list[Isometry] = [Isometry.identity()]
    while frontier:
        nxt: list[Isometry] = []
        for g in frontier:
            for h in generators:
                p = g * h
                c = lattice.reduce(p.t)
                known = table.get(p.m)
                if known is None:
                    table[p.m] = c
                    order.append(p.m)
                    nxt.append(Isometry(c, p.m))
                elif known != c:
                    raise ValueError(
                        "generators do not define a wallpaper group: matrix part "
                        "occurs with two distinct coset vectors"
                    )
        frontier = nxt
    return order, table


def build_group(name: str) -> WallpaperGroup:
    """Construct one of the 17 groups by name (case-insensitive)."""
    key = name.lower()
    if key not in _GENERATORS:
        raise KeyError(f"unknown wallpaper group {name!r}; valid: {', '.join(GROUP_NAMES)}")
    lattice, gens = _GENERATORS[key]
    point_group, coset_table = _close_quotient(gens, lattice)
    expected = _POINT_GROUP_ORDERS[key]
    if len(point_group) != expected:
        raise AssertionError(
            f"{key}: point group closure has order {len(point_group)}, expected {expected}"
        )
    return WallpaperGroup(key, lattice, gens, point_group, coset_table)


_GROUP_CACHE: dict[str, WallpaperGroup] = {}


def group(name: str) -> WallpaperGroup:
    """Cached accessor for build_group."""
    key = name.lower()
    if key not in _GROUP_CACHE:
        _GROUP_CACHE[key] = build_group(key)
    return _GROUP_CACHE[key]


def member(g: WallpaperGroup, iso: Isometry) -> bool:
    """Exact membership test: the matrix part must be a point-group element
    and the translation part must match its coset vector modulo the lattice."""
    c = g.coset_table.get(iso.m)
    if c is None:
        return False
    return g.lattice.contains(iso.t - c)


def compatible(g: WallpaperGroup, d: int) -> bool:
    """Whether conjugation by dilation-by-d maps the group into itself.

    Equivalent to (d - 1) c_S in the lattice for all S; see module docstring
    for the derivation.
    """
    if d < 2:
        raise ValueError("dilation must be an integer >= 2")
    dm1 = Scalar(d - 1)
    return all(g.lattice.contains(dm1 * c) for c in g.coset_table.values())


def dual_lattice(lat: Lattice) -> Lattice:
    return lat.dual()


def orbit(g: WallpaperGroup, r: Region) -> list[Region]:
    """One image region per point-group element, in derivation order."""
    return [r.transform(s) for s in g.point_group]


# named sectors with exact boundary directions; pi/4 and pi/3 boundaries all
# have direction vectors inside the field
_NAMED_SECTORS = {
    "whole_plane": lambda: Sector.whole_plane(),
    "right_half_plane": lambda: Sector([Wedge(Vec2(0, -1), Vec2(0, 1))]),
    "diagonal_half_plane": lambda: Sector([Wedge(Vec2(1, 1), Vec2(-1, -1))]),
    "first_quadrant": lambda: Sector([Wedge(Vec2(1, 0), Vec2(0, 1))]),
    "diagonal_wedge": lambda: Sector([Wedge(Vec2(1, -1), Vec2(1, 1))]),
    "first_octant": lambda: Sector([Wedge(Vec2(1, 0), Vec2(1, 1))]),
    "first_and_fifth_octants": lambda: Sector(
        [Wedge(Vec2(1, 0), Vec2(1, 1)), Wedge(Vec2(-1, 0), Vec2(-1, -1))]
    ),
}

SECTOR_NAMES: tuple[str, ...] = tuple(_NAMED_SECTORS)


def named_sector(name: str) -> Sector:
    """Build one of the named sectors used throughout the package."""
    try:
        return _NAMED_SECTORS[name]()
    except KeyError:
        raise KeyError(
            f"unknown sector {name!r}; valid: {', '.join(SECTOR_NAMES)}"
        ) from None


# sector assigned to each group by the existence construction: the polar
# sector tiled by the point group for the square-lattice groups, and for the
# hexagonal groups the sector of the square-lattice set that is transported
# onto them (first quadrant for p3/p6, first octant for p31m/p6m,
# first-and-fifth octants for p3m1)
_GROUP_SECTOR = {
    "p1": "whole_plane",
    "p2": "right_half_plane",
    "pm": "right_half_plane",
    "pg": "right_half_plane",
    "cm": "diagonal_half_plane",
    "pmm": "first_quadrant",
    "pmg": "first_quadrant",
    "pgg": "first_quadrant",
    "p4": "first_quadrant",
    "cmm": "diagonal_wedge",
    "p4m": "first_octant",
    "p4g": "first_octant",
    "p3": "first_quadrant",
    "p6": "first_quadrant",
    "p31m": "first_octant",
    "p6m": "first_octant",
    "p3m1": "first_and_fifth_octants",
}


def canonical_sector(name: str) -> Sector:
    """Sector assigned to the group by the existence construction (whole
    plane for p1; for hexagonal groups, the sector of the pre-transport
    square-lattice set)."""
    key = name.lower()
    if key not in _GROUP_SECTOR:
        raise KeyError(f"unknown wallpaper group {name!r}")
    return named_sector(_GROUP_SECTOR[key])
