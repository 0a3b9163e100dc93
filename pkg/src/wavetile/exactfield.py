"""Exact arithmetic over the real quadratic field Q(sqrt(3)).

Every coordinate, matrix entry and area in this package is an element
``a + b*sqrt(3)`` with rational ``a, b``.  The field is closed under all the
point-group matrices (entries like 1/2 and sqrt(3)/2), the hexagonal lattice
basis and its inverse, and under polygon clipping, so geometric predicates
are decided exactly and no tolerance appears anywhere in the exact layer.

Rationals are ``gmpy2.mpq`` when gmpy2 is installed (much faster), falling
back to ``fractions.Fraction``.  Both keep numerator/denominator in lowest
terms with a positive denominator.
"""

from __future__ import annotations

import math
import re
from typing import Union

try:
    from gmpy2 import mpq as Rational
except ImportError:  # pragma: no cover - gmpy2 is an optional speedup
    from fractions import Fraction as Rational

__all__ = ["Rational", "rational", "Scalar", "as_scalar", "ZERO", "ONE", "HALF", "SQRT3"]

_SQRT3_FLOAT = math.sqrt(3.0)

RationalLike = Union[int, str, "Rational"]
ScalarLike = Union["Scalar", int, "Rational"]


def rational(p: RationalLike, q: RationalLike = 1) -> Rational:
    """Exact rational p/q.  Floats are rejected: exactness is the contract."""
    if isinstance(p, float) or isinstance(q, float):
        raise TypeError("floats cannot enter the exact field; use int or Rational")
    return Rational(p) / Rational(q) if q != 1 else Rational(p)


def _rat(x: RationalLike) -> Rational:
    if isinstance(x, Rational):
        return x
    if isinstance(x, (int, str)):
        return Rational(x)
    raise TypeError(f"cannot build an exact rational from {type(x).__name__}")


def _rsign(q) -> int:
    if q > 0:
        return 1
    if q < 0:
        return -1
    return 0


_TEXT_RE = re.compile(r"^(-?\d+)/(-?\d+)(?:([+-])(\d+)/(-?\d+)√3)?$")


class Scalar:
    """An element ``a + b*sqrt(3)`` of Q(sqrt(3)).

    Values are immutable in use: no method mutates self, so instances can be
    shared freely across threads.  ``a`` and ``b`` are always in lowest terms
    (the rational backend guarantees it), which makes equality structural.
    """

    __slots__ = ("a", "b")

    def __init__(self, a: RationalLike = 0, b: RationalLike = 0):
        self.a = _rat(a)
        self.b = _rat(b)

    # -- construction helpers ------------------------------------------------

    @classmethod
    def _mk(cls, a, b) -> "Scalar":
        # internal fast path: a and b are already Rational
        s = object.__new__(cls)
        s.a = a
        s.b = b
        return s

    @classmethod
    def sqrt3(cls) -> "Scalar":
        return cls(0, 1)

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def as_rational(self) -> Rational:
        """The exact rational value; raises if a sqrt(3) part is present."""
        if self.b != 0:
            raise ValueError(f"{self} is irrational")
        return self.a

    # -- ring/field operations -----------------------------------------------

    def __add__(self, other: ScalarLike) -> "Scalar":
        if type(other) is Scalar:
            return Scalar._mk(self.a + other.a, self.b + other.b)
        o = as_scalar(other)
        if o is NotImplemented:
            return NotImplemented
        return Scalar._mk(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other: ScalarLike) -> "Scalar":
        if type(other) is Scalar:
            return Scalar._mk(self.a - other.a, self.b - other.b)
        o = as_scalar(other)
        if o is NotImplemented:
            return NotImplemented
        return Scalar._mk(self.a - o.a, self.b - o.b)

    def __rsub__(self, other: ScalarLike) -> "Scalar":
        o = as_scalar(other)
        if o is NotImplemented:
            return NotImplemented
        return Scalar._mk(o.a - self.a, o.b - self.b)

    def __neg__(self) -> "Scalar":
        return Scalar._mk(-self.a, -self.b)

    def __mul__(self, other: ScalarLike) -> "Scalar":
        # (a1 + b1 r)(a2 + b2 r) = a1 a2 + 3 b1 b2 + (a1 b2 + b1 a2) r
        if type(other) is Scalar:
            return Scalar._mk(
                self.a * other.a + 3 * self.b * other.b,
                self.a * other.b + self.b * other.a,
            )
        o = as_scalar(other)
        if o is NotImplemented:
            return NotImplemented
        return Scalar._mk(self.a * o.a + 3 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        """Multiplicative inverse; ZeroDivisionError on zero."""
        # 1/(a + b r) = (a - b r)/(a^2 - 3 b^2); the norm vanishes only at 0
        n = self.a * self.a - 3 * self.b * self.b
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt(3))")
        return Scalar._mk(self.a / n, -self.b / n)

    def __truediv__(self, other: ScalarLike) -> "Scalar":
        o = as_scalar(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: ScalarLike) -> "Scalar":
        o = as_scalar(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int) -> "Scalar":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __abs__(self) -> "Scalar":
        return -self if self.sign() < 0 else self

    # -- exact predicates ------------------------------------------------------

    def sign(self) -> int:
        """Exact sign of the real number a + b*sqrt(3)."""
        sa = _rsign(self.a)
        sb = _rsign(self.b)
        if sb == 0:
            return sa
        if sa == 0:
            return sb
        if sa == sb:
            return sa
        # opposite signs: |a| vs |b| sqrt(3) decided by comparing a^2 with 3 b^2
        c = _rsign(self.a * self.a - 3 * self.b * self.b)
        if c == 0:
            # would mean sqrt(3) is rational
            raise ArithmeticError("impossible equality a^2 == 3 b^2 with a, b != 0")
        return sa * c

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    def __eq__(self, other: object) -> bool:
        o = as_scalar(other)
        if o is NotImplemented:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self) -> int:
        # rational values hash like the underlying number so that
        # Scalar(q) == q implies equal hashes
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __lt__(self, other: ScalarLike) -> bool:
        return (self - other).sign() < 0

    def __le__(self, other: ScalarLike) -> bool:
        return (self - other).sign() <= 0

    def __gt__(self, other: ScalarLike) -> bool:
        return (self - other).sign() > 0

    def __ge__(self, other: ScalarLike) -> bool:
        return (self - other).sign() >= 0

    # -- conversions -----------------------------------------------------------

    def to_float(self) -> float:
        return float(self.a) + float(self.b) * _SQRT3_FLOAT

    __float__ = to_float

    def floor(self) -> int:
        """Largest integer <= self, exactly."""
        n = math.floor(self.to_float())
        while (self - n).sign() < 0:
            n -= 1
        while (self - (n + 1)).sign() >= 0:
            n += 1
        return n

    def ceil(self) -> int:
        return -((-self).floor())

    # -- text form ---------------------------------------------------------------

    def to_text(self) -> str:
        """Canonical text form "p/q" or "p/q±r/s√3" used in the JSON formats."""
        a = f"{self.a.numerator}/{self.a.denominator}"
        if self.b == 0:
            return a
        s = "-" if self.b < 0 else "+"
        m = -self.b if self.b < 0 else self.b
        return f"{a}{s}{m.numerator}/{m.denominator}√3"

    @classmethod
    def parse(cls, text: str) -> "Scalar":
        """Inverse of to_text; rejects malformed input and zero denominators."""
        m = _TEXT_RE.match(text.strip())
        if m is None:
            raise ValueError(f"malformed scalar text: {text!r}")
        pn, pd, sgn, rn, rd = m.groups()
        if int(pd) == 0 or (rd is not None and int(rd) == 0):
            raise ValueError(f"zero denominator in scalar text: {text!r}")
        if int(pd) < 0 or (rd is not None and int(rd) < 0):
            raise ValueError(f"negative denominator in scalar text: {text!r}")
        a = Rational(int(pn), int(pd))
        if sgn is None:
            return cls(a)
        b = Rational(int(rn), int(rd))
        return cls(a, -b if sgn == "-" else b)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Scalar({self.to_text()!r})"


def as_scalar(x) -> Scalar:
    """Coerce int/Rational to Scalar; NotImplemented for anything else."""
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Rational)):
        return Scalar(x)
    return NotImplemented


ZERO = Scalar(0)
ONE = Scalar(1)
HALF = Scalar(rational(1, 2))
SQRT3 = Scalar(0, 1)
