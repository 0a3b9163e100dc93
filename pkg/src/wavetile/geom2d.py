"""Exact planar geometry: vectors, matrices, isometries, polygons, regions.

Regions are finite unions of convex polygons with Q(sqrt(3)) coordinates and
are compared only up to sets of measure zero; open/closed edges are never
tracked, so shared boundaries do not count as overlap.  All boolean
operations reduce to exact half-plane clipping of convex pieces, which keeps
every intermediate object convex and every coordinate in the field.

All values are immutable; operations are pure and deterministic.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Optional, Sequence

from .exactfield import ONE, ZERO, Rational, Scalar, as_scalar, rational

__all__ = [
    "Vec2",
    "Mat2",
    "Isometry",
    "ConvexPolygon",
    "Region",
    "Wedge",
    "Sector",
]


class Vec2:
    """A point or direction with exact coordinates."""

    __slots__ = ("x", "y")

    def __init__(self, x, y):
        self.x = _scal(x)
        self.y = _scal(y)

    @classmethod
    def _mk(cls, x: Scalar, y: Scalar) -> "Vec2":
        v = object.__new__(cls)
        v.x = x
        v.y = y
        return v

    def __add__(self, other: "Vec2") -> "Vec2":
        return Vec2._mk(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Vec2") -> "Vec2":
        return Vec2._mk(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "Vec2":
        return Vec2._mk(-self.x, -self.y)

    def __rmul__(self, s) -> "Vec2":
        s = _scal(s)
        return Vec2._mk(s * self.x, s * self.y)

    __mul__ = __rmul__

    def dot(self, other: "Vec2") -> Scalar:
        return self.x * other.x + self.y * other.y

    def cross(self, other: "Vec2") -> Scalar:
        return self.x * other.y - self.y * other.x

    def norm_sq(self) -> Scalar:
        return self.dot(self)

    def is_zero(self) -> bool:
        return not self.x and not self.y

    def to_floats(self) -> tuple[float, float]:
        return (self.x.to_float(), self.y.to_float())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Vec2):
            return NotImplemented
        return self.x == other.x and self.y == other.y

    def __hash__(self) -> int:
        return hash((self.x, self.y))

    def __repr__(self) -> str:
        return f"Vec2({self.x}, {self.y})"


def _scal(x) -> Scalar:
    s = as_scalar(x)
    if s is NotImplemented:
        raise TypeError(f"expected an exact scalar, got {type(x).__name__}")
    return s


V = Vec2  # short alias used heavily in catalog data


class Mat2:
    """Row-major 2x2 matrix [[a, b], [c, d]] with exact entries."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        self.a = _scal(a)
        self.b = _scal(b)
        self.c = _scal(c)
        self.d = _scal(d)

    @classmethod
    def identity(cls) -> "Mat2":
        return cls(1, 0, 0, 1)

    @classmethod
    def from_columns(cls, u: Vec2, v: Vec2) -> "Mat2":
        return cls(u.x, v.x, u.y, v.y)

    def matvec(self, v: Vec2) -> Vec2:
        return Vec2(self.a * v.x + self.b * v.y, self.c * v.x + self.d * v.y)

    def __matmul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def det(self) -> Scalar:
        return self.a * self.d - self.b * self.c

    def transpose(self) -> "Mat2":
        return Mat2(self.a, self.c, self.b, self.d)

    def inverse(self) -> "Mat2":
        dt = self.det()
        if dt.sign() == 0:
            raise ValueError("singular matrix has no inverse")
        return Mat2(self.d / dt, -self.b / dt, -self.c / dt, self.a / dt)

    def is_orthogonal(self) -> bool:
        p = self @ self.transpose()
        return p == Mat2.identity()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Mat2):
            return NotImplemented
        return (
            self.a == other.a
            and self.b == other.b
            and self.c == other.c
            and self.d == other.d
        )

    def __hash__(self) -> int:
        return hash((self.a, self.b, self.c, self.d))

    def __repr__(self) -> str:
        return f"Mat2({self.a}, {self.b}, {self.c}, {self.d})"


class Isometry:
    """A pair [t, m] acting on the plane by z -> m(t + z).

    Composition follows the same convention:
    [x, L] * [y, M] = [M^(-1) x + y, L M], so that (g * h)(z) = g(h(z)) holds
    in the sense of the action above.
    """

    __slots__ = ("t", "m")

    def __init__(self, t: Vec2, m: Mat2):
        self.t = t
        self.m = m

    @classmethod
    def identity(cls) -> "Isometry":
        return cls(Vec2(0, 0), Mat2.identity())

    @classmethod
    def translation(cls, v: Vec2) -> "Isometry":
        return cls(v, Mat2.identity())

    @classmethod
    def linear(cls, m: Mat2) -> "Isometry":
        return cls(Vec2(0, 0), m)

    def apply(self, p: Vec2) -> Vec2:
        return self.m.matvec(self.t + p)

    def __mul__(self, other: "Isometry") -> "Isometry":
        return Isometry(
            other.m.inverse().matvec(self.t) + other.t,
            self.m @ other.m,
        )

    def inverse(self) -> "Isometry":
        return Isometry(-self.m.matvec(self.t), self.m.inverse())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Isometry):
            return NotImplemented
        return self.t == other.t and self.m == other.m

    def __hash__(self) -> int:
        return hash((self.t, self.m))

    def __repr__(self) -> str:
        return f"Isometry(t={self.t!r}, m={self.m!r})"


def compose(g: Isometry, h: Isometry) -> Isometry:
    """Product g * h under the convention (g * h)(z) = g(h(z))."""
    return g * h


# ---------------------------------------------------------------------------
# convex polygons
# ---------------------------------------------------------------------------


class DegeneratePolygonError(ValueError):
    """Raised when a vertex list does not bound a convex set of positive area."""


class ConvexPolygon:
    """Convex polygon stored as CCW vertices; collinear input vertices are
    removed and orientation is normalized, so construction from any simple
    convex vertex list (either winding) is accepted."""

    __slots__ = ("vertices", "_area", "_bbox", "_fbbox")

    def __init__(self, vertices: Sequence[Vec2]):
        vs = _clean_vertices(list(vertices))
        if len(vs) < 3:
            raise DegeneratePolygonError("fewer than 3 distinct vertices")
        area2 = _twice_signed_area(vs)
        if area2.sign() < 0:
            vs.reverse()
            area2 = -area2
        if area2.sign() == 0:
            raise DegeneratePolygonError("zero area")
        n = len(vs)
        for i in range(n):
            e1 = vs[(i + 1) % n] - vs[i]
            e2 = vs[(i + 2) % n] - vs[(i + 1) % n]
            if e1.cross(e2).sign() < 0:
                raise DegeneratePolygonError("vertex list is not convex")
        self.vertices: tuple[Vec2, ...] = tuple(vs)
        self._area: Scalar = HALF_ * area2
        self._bbox: Optional[tuple[Scalar, Scalar, Scalar, Scalar]] = None
        self._fbbox: Optional[tuple[float, float, float, float]] = None

    def area(self) -> Scalar:
        return self._area

    def bbox(self) -> tuple[Scalar, Scalar, Scalar, Scalar]:
        """(xmin, ymin, xmax, ymax), cached."""
        if self._bbox is None:
            xs = [v.x for v in self.vertices]
            ys = [v.y for v in self.vertices]
            self._bbox = (min(xs), min(ys), max(xs), max(ys))
        return self._bbox

    def fbbox(self) -> tuple[float, float, float, float]:
        """Outward-padded float bounding box: disjointness of padded boxes
        implies true disjointness, so this is a sound fast rejection test."""
        if self._fbbox is None:
            xs = [v.x.to_float() for v in self.vertices]
            ys = [v.y.to_float() for v in self.vertices]
            m = max(1.0, max(abs(x) for x in xs), max(abs(y) for y in ys))
            eps = 1e-9 * m
            self._fbbox = (min(xs) - eps, min(ys) - eps, max(xs) + eps, max(ys) + eps)
        return self._fbbox

    def edges(self) -> Iterator[tuple[Vec2, Vec2]]:
        vs = self.vertices
        n = len(vs)
        for i in range(n):
            yield vs[i], vs[(i + 1) % n]

    # -- transforms -----------------------------------------------------------

    def translate(self, v: Vec2) -> "ConvexPolygon":
        return ConvexPolygon([p + v for p in self.vertices])

    def transform(self, m: Mat2) -> "ConvexPolygon":
        return ConvexPolygon([m.matvec(p) for p in self.vertices])

    def scale(self, s) -> "ConvexPolygon":
        s = _scal(s)
        return ConvexPolygon([s * p for p in self.vertices])

    # -- predicates -------------------------------------------------------------

    def contains(self, p: Vec2) -> bool:
        """Closed-polygon membership."""
        for a, b in self.edges():
            if (b - a).cross(p - a).sign() < 0:
                return False
        return True

    def contains_interior(self, p: Vec2) -> bool:
        """Strict interior membership."""
        for a, b in self.edges():
            if (b - a).cross(p - a).sign() <= 0:
                return False
        return True

    def squared_distance_to_origin(self) -> Scalar:
        """Exact squared distance from the origin to the closed polygon."""
        o = Vec2(0, 0)
        if self.contains(o):
            return ZERO
        return self.boundary_squared_distance_to_origin()

    def boundary_squared_distance_to_origin(self) -> Scalar:
        """Exact squared distance from the origin to the polygon boundary."""
        best: Optional[Scalar] = None
        for a, b in self.edges():
            d = b - a
            dd = d.norm_sq()
            # project the origin onto the segment, clamped to [0, 1]
            t = (-a.dot(d)) / dd
            if t.sign() < 0:
                q = a
            elif (t - ONE).sign() > 0:
                q = b
            else:
                q = a + t * d
            dist = q.norm_sq()
            if best is None or dist < best:
                best = dist
        assert best is not None
        return best

    def max_squared_radius(self) -> Scalar:
        return max(v.norm_sq() for v in self.vertices)

    def origin_tangent_wedge(self) -> tuple[Vec2, Vec2]:
        """Boundary directions (lo, hi) of the cone spanned by the polygon at
        the origin; valid only when the origin lies in the closed polygon's
        boundary.  All vertex directions lie CCW between lo and hi, a span of
        at most pi."""
        dirs = [v for v in self.vertices if not v.is_zero()]
        lo = None
        for d in dirs:
            if all(d.cross(e).sign() >= 0 for e in dirs):
                lo = d
                break
        hi = None
        for d in dirs:
            if all(d.cross(e).sign() <= 0 for e in dirs):
                hi = d
                break
        if lo is None or hi is None:
            raise ValueError("origin is interior to the polygon; no tangent wedge")
        return lo, hi

    # -- clipping ---------------------------------------------------------------

    def clip_halfplane(self, a: Vec2, d: Vec2, keep_nonneg: bool) -> Optional["ConvexPolygon"]:
        """Clip against the line through ``a`` with direction ``d``; keeps the
        side where cross(d, z - a) is >= 0 (or <= 0).  Returns None when the
        remainder has zero area."""
        vs = self.vertices
        # value of cross(d, v - a) per vertex; kept exact for the crossing point
        vals = [d.x * (v.y - a.y) - d.y * (v.x - a.x) for v in vs]
        sides = [v.sign() for v in vals]
        if keep_nonneg:
            if all(s >= 0 for s in sides):
                return self
            if all(s <= 0 for s in sides):
                return None
        else:
            if all(s <= 0 for s in sides):
                return self
            if all(s >= 0 for s in sides):
                return None
        keep = 1 if keep_nonneg else -1
        out: list[Vec2] = []
        n = len(vs)
        for i in range(n):
            j = (i + 1) % n
            sp, sq = sides[i], sides[j]
            if sp * keep >= 0:
                out.append(vs[i])
            if sp * sq < 0:
                # edge crosses the line: p + t (q - p) with t = sp/(sp - sq)
                p, q = vs[i], vs[j]
                t = vals[i] / (vals[i] - vals[j])
                out.append(p + t * (q - p))
        return _polygon_or_none(out)

    def intersect(self, other: "ConvexPolygon") -> Optional["ConvexPolygon"]:
        if _fbbox_disjoint(self.fbbox(), other.fbbox()):
            return None
        cur: Optional[ConvexPolygon] = self
        for a, b in other.edges():
            cur = cur.clip_halfplane(a, b - a, keep_nonneg=True)
            if cur is None:
                return None
        return cur

    def split_by(self, other: "ConvexPolygon") -> tuple[Optional["ConvexPolygon"], list["ConvexPolygon"]]:
        """(self intersect other, convex decomposition of self minus other).

        The difference pieces are interior-disjoint.  When the two polygons
        do not overlap, self is returned unsplit, which makes region
        normalization idempotent."""
        if _fbbox_disjoint(self.fbbox(), other.fbbox()):
            return None, [self]
        out: list[ConvexPolygon] = []
        remaining: Optional[ConvexPolygon] = self
        for a, b in other.edges():
            d = b - a
            outside = remaining.clip_halfplane(a, d, keep_nonneg=False)
            if outside is not None:
                out.append(outside)
            remaining = remaining.clip_halfplane(a, d, keep_nonneg=True)
            if remaining is None:
                return None, [self]
        return remaining, out

    def subtract(self, other: "ConvexPolygon") -> list["ConvexPolygon"]:
        """Convex decomposition of self minus other (measure-zero exact)."""
        return self.split_by(other)[1]

    # -- identity -----------------------------------------------------------------

    def _canonical(self) -> tuple[Vec2, ...]:
        # rotate so the exact lexicographically smallest vertex comes first
        vs = self.vertices
        k = 0
        for i in range(1, len(vs)):
            c = (vs[i].x - vs[k].x).sign()
            if c < 0 or (c == 0 and (vs[i].y - vs[k].y).sign() < 0):
                k = i
        return vs[k:] + vs[:k]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ConvexPolygon):
            return NotImplemented
        return self._canonical() == other._canonical()

    def __hash__(self) -> int:
        return hash(self._canonical())

    def __repr__(self) -> str:
        pts = ", ".join(f"({v.x},{v.y})" for v in self.vertices)
        return f"ConvexPolygon[{pts}]"


HALF_ = Scalar(rational(1, 2))


def _clean_vertices(vs: list[Vec2]) -> list[Vec2]:
    """Drop repeated and collinear vertices (wrap-around aware)."""
    changed = True
    while changed and len(vs) >= 3:
        changed = False
        out: list[Vec2] = []
        n = len(vs)
        for i in range(n):
            prev, cur, nxt = vs[i - 1], vs[i], vs[(i + 1) % n]
            if cur == prev:
                changed = True
                continue
            if (cur - prev).cross(nxt - cur).sign() == 0:
                changed = True
                continue
            out.append(cur)
        vs = out
    return vs


def _twice_signed_area(vs: Sequence[Vec2]) -> Scalar:
    total = ZERO
    n = len(vs)
    for i in range(n):
        total = total + vs[i].cross(vs[(i + 1) % n])
    return total


def _polygon_or_none(vs: list[Vec2]) -> Optional[ConvexPolygon]:
    try:
        return ConvexPolygon(vs)
    except DegeneratePolygonError:
        return None


def _fbbox_disjoint(b1: tuple[float, float, float, float], b2: tuple[float, float, float, float]) -> bool:
    return b1[2] <= b2[0] or b2[2] <= b1[0] or b1[3] <= b2[1] or b2[3] <= b1[1]


# ---------------------------------------------------------------------------
# regions
# ---------------------------------------------------------------------------


class Region:
    """Finite union of convex polygons with pairwise intersections of zero
    area (shared edges allowed).  Operations producing a Region preserve this
    invariant; use normalize() to rebuild it from untrusted pieces."""

    __slots__ = ("pieces", "_area", "_bbox", "_fbbox")

    def __init__(self, pieces: Iterable[ConvexPolygon] = ()):
        self.pieces: tuple[ConvexPolygon, ...] = tuple(p for p in pieces if p is not None)
        self._area: Optional[Scalar] = None
        self._bbox = None
        self._fbbox: Optional[tuple[float, float, float, float]] = None

    @classmethod
    def empty(cls) -> "Region":
        return cls(())

    @classmethod
    def polygon(cls, vertices: Sequence[Vec2]) -> "Region":
        return cls((ConvexPolygon(vertices),))

    @classmethod
    def box(cls, x0, y0, x1, y1) -> "Region":
        """Axis-aligned rectangle [x0,x1] x [y0,y1] (boundaries immaterial)."""
        return cls.polygon([Vec2(x0, y0), Vec2(x1, y0), Vec2(x1, y1), Vec2(x0, y1)])

    @property
    def is_empty(self) -> bool:
        return not self.pieces

    def area(self) -> Scalar:
        if self._area is None:
            total = ZERO
            for p in self.pieces:
                total = total + p.area()
            self._area = total
        return self._area

    def bbox(self) -> Optional[tuple[Scalar, Scalar, Scalar, Scalar]]:
        if self.is_empty:
            return None
        if self._bbox is None:
            boxes = [p.bbox() for p in self.pieces]
            self._bbox = (
                min(b[0] for b in boxes),
                min(b[1] for b in boxes),
                max(b[2] for b in boxes),
                max(b[3] for b in boxes),
            )
        return self._bbox

    def fbbox(self) -> Optional[tuple[float, float, float, float]]:
        if self.is_empty:
            return None
        if self._fbbox is None:
            boxes = [p.fbbox() for p in self.pieces]
            self._fbbox = (
                min(b[0] for b in boxes),
                min(b[1] for b in boxes),
                max(b[2] for b in boxes),
                max(b[3] for b in boxes),
            )
        return self._fbbox

    # -- transforms ----------------------------------------------------------

    def translate(self, v: Vec2) -> "Region":
        return Region(p.translate(v) for p in self.pieces)

    def transform(self, m: Mat2) -> "Region":
        if m.det().sign() == 0:
            raise ValueError("cannot transform a region by a singular matrix")
        return Region(p.transform(m) for p in self.pieces)

    def dilate(self, s) -> "Region":
        s = _scal(s)
        if s.sign() == 0:
            raise ValueError("cannot dilate a region by zero")
        return Region(p.scale(s) for p in self.pieces)

    # -- boolean operations ------------------------------------------------------

    def intersect(self, other: "Region") -> "Region":
        if self.is_empty or other.is_empty:
            return Region.empty()
        if _fbbox_disjoint(self.fbbox(), other.fbbox()):
            return Region.empty()
        out: list[ConvexPolygon] = []
        for p in self.pieces:
            for q in other.pieces:
                r = p.intersect(q)
                if r is not None:
                    out.append(r)
        return Region(out)

    def subtract(self, other: "Region") -> "Region":
        if self.is_empty:
            return Region.empty()
        if other.is_empty or _fbbox_disjoint(self.fbbox(), other.fbbox()):
            return self
        out: list[ConvexPolygon] = []
        for p in self.pieces:
            parts = [p]
            for q in other.pieces:
                parts = [r for part in parts for r in part.subtract(q)]
                if not parts:
                    break
            out.extend(parts)
        return Region(out)

    def union(self, other: "Region") -> "Region":
        return Region(self.pieces + other.subtract(self).pieces)

    def normalize(self) -> "Region":
        """Rebuild as a union of interior-disjoint pieces.  Idempotent: pieces
        that are already disjoint are kept unsplit."""
        acc = Region.empty()
        for p in self.pieces:
            acc = acc.union(Region((p,)))
        return acc

    def equals_ae(self, other: "Region") -> bool:
        """Equality up to measure zero."""
        return self.subtract(other).area().sign() == 0 and other.subtract(self).area().sign() == 0

    # -- origin geometry -----------------------------------------------------------

    def squared_distance_to_origin(self) -> Scalar:
        if self.is_empty:
            raise ValueError("empty region has no distance to the origin")
        return min(p.squared_distance_to_origin() for p in self.pieces)

    def origin_cone_angle_positive(self) -> bool:
        """True iff the origin lies in the closure of the region with positive
        angular density of its interior; for convex pieces of positive area
        this is exactly 'some piece touches the origin'."""
        return any(p.squared_distance_to_origin().sign() == 0 for p in self.pieces)

    def contains_point(self, p: Vec2) -> bool:
        return any(piece.contains(p) for piece in self.pieces)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Region):
            return NotImplemented
        return self.pieces == other.pieces

    def __hash__(self) -> int:
        return hash(self.pieces)

    def __repr__(self) -> str:
        return f"Region({len(self.pieces)} pieces, area={self.area()})"


# ---------------------------------------------------------------------------
# sectors: finite unions of polar wedges, dilation invariant
# ---------------------------------------------------------------------------


class Wedge:
    """Polar sector {z: cross(d1, z) >= 0 and cross(d2, z) <= 0} spanning the
    angles from d1 counterclockwise to d2, with span in (0, pi].  A span of
    exactly pi (d2 antiparallel to d1) is a half plane."""

    __slots__ = ("d1", "d2")

    def __init__(self, d1: Vec2, d2: Vec2):
        if d1.is_zero() or d2.is_zero():
            raise ValueError("wedge directions must be nonzero")
        c = d1.cross(d2).sign()
        if c < 0:
            raise ValueError("wedge spans more than pi; split it into two")
        if c == 0 and d1.dot(d2).sign() > 0:
            raise ValueError("wedge directions are parallel (zero span)")
        self.d1 = d1
        self.d2 = d2

    def is_halfplane(self) -> bool:
        return self.d1.cross(self.d2).sign() == 0

    def contains_dir_strict(self, e: Vec2) -> bool:
        return self.d1.cross(e).sign() > 0 and self.d2.cross(e).sign() < 0

    def contains_dir(self, e: Vec2) -> bool:
        return self.d1.cross(e).sign() >= 0 and self.d2.cross(e).sign() <= 0

    def clip(self, poly: ConvexPolygon) -> Optional[ConvexPolygon]:
        o = Vec2(0, 0)
        cur = poly.clip_halfplane(o, self.d1, keep_nonneg=True)
        if cur is None:
            return None
        return cur.clip_halfplane(o, self.d2, keep_nonneg=False)

    def __repr__(self) -> str:
        return f"Wedge({self.d1!r} -> {self.d2!r})"


class Sector:
    """Finite union of interior-disjoint wedges, or the whole plane.

    Sectors are invariant under dilation, which is what lets the dilation
    tiling check restrict its fundamental domain to the sector.
    """

    __slots__ = ("wedges",)

    def __init__(self, wedges: Optional[Iterable[Wedge]]):
        if wedges is None:
            self.wedges: Optional[tuple[Wedge, ...]] = None
            return
        ws = tuple(wedges)
        for i in range(len(ws)):
            for j in range(i + 1, len(ws)):
                if _wedges_overlap(ws[i], ws[j]):
                    raise ValueError("sector wedges must be interior-disjoint")
        self.wedges = ws

    @classmethod
    def whole_plane(cls) -> "Sector":
        return cls(None)

    @property
    def is_whole_plane(self) -> bool:
        return self.wedges is None

    def clip_region(self, r: Region) -> Region:
        if self.is_whole_plane:
            return r
        out: list[ConvexPolygon] = []
        for w in self.wedges:
            for p in r.pieces:
                q = w.clip(p)
                if q is not None:
                    out.append(q)
        return Region(out)

    def contains_region(self, r: Region) -> bool:
        """True iff r minus the sector has zero area."""
        if self.is_whole_plane or r.is_empty:
            return True
        return (r.area() - self.clip_region(r).area()).sign() == 0

    def __repr__(self) -> str:
        if self.is_whole_plane:
            return "Sector(whole plane)"
        return f"Sector({list(self.wedges)!r})"


def _wedges_overlap(a: Wedge, b: Wedge) -> bool:
    """Positive-area overlap test for wedges with span <= pi."""
    for e in (a.d1, a.d2):
        if b.contains_dir_strict(e):
            return True
    for e in (b.d1, b.d2):
        if a.contains_dir_strict(e):
            return True
    # identical wedges (same boundary rays)
    same = (
        a.d1.cross(b.d1).sign() == 0
        and a.d1.dot(b.d1).sign() > 0
        and a.d2.cross(b.d2).sign() == 0
        and a.d2.dot(b.d2).sign() > 0
    )
    return same
