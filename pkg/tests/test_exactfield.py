import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wavetile.exactfield import HALF, ONE, SQRT3, Rational, Scalar, rational


def rat(p, q=1):
    return rational(p, q)


# strategy: small exact rationals and scalars
rationals = st.builds(rat, st.integers(-50, 50), st.integers(1, 24))
scalars = st.builds(Scalar, rationals, rationals)
nonzero_scalars = scalars.filter(lambda s: bool(s))


class TestArithmetic:
    def test_identity_times_sqrt3_half(self):
        assert Scalar(1) * Scalar(0, rat(1, 2)) == Scalar(0, rat(1, 2))

    def test_sqrt3_squared_is_three(self):
        assert SQRT3 * SQRT3 == Scalar(3)

    def test_self_division_is_one(self):
        x = Scalar(1, 1)
        assert x / x == ONE

    def test_division_by_zero_signals(self):
        with pytest.raises(ZeroDivisionError):
            ONE / Scalar(0)

    @given(scalars, scalars, scalars)
    @settings(max_examples=60)
    def test_field_axioms(self, x, y, z):
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert x + y == y + x
        assert x * y == y * x
        assert x + (-x) == Scalar(0)

    @given(nonzero_scalars)
    @settings(max_examples=60)
    def test_multiplicative_inverse(self, x):
        assert x * x.inverse() == ONE
        assert (ONE / x) * x == ONE

    @given(scalars, st.integers(0, 6))
    @settings(max_examples=40)
    def test_pow_matches_repeated_product(self, x, n):
        prod = ONE
        for _ in range(n):
            prod = prod * x
        assert x**n == prod


class TestSign:
    def test_zero(self):
        assert Scalar(0).sign() == 0

    def test_two_minus_sqrt3_positive(self):
        # oracle: 2^2 = 4 > 3 = 3 * 1^2, so the rational part dominates
        assert 2 * 2 > 3 * 1 * 1
        assert Scalar(2, -1).sign() == 1

    def test_five_thirds_minus_sqrt3_negative(self):
        # oracle: (5/3)^2 = 25/9 < 3
        assert 5 * 5 < 3 * 9
        assert Scalar(rat(5, 3), -1).sign() == -1

    @given(scalars, scalars)
    @settings(max_examples=80)
    def test_sign_multiplicative(self, x, y):
        assert (x * y).sign() == x.sign() * y.sign()

    @given(scalars, scalars)
    @settings(max_examples=80)
    def test_comparison_agrees_with_floats_when_separated(self, x, y):
        fx, fy = x.to_float(), y.to_float()
        if abs(fx - fy) > 1e-9:
            assert (x < y) == (fx < fy)

    @given(scalars)
    @settings(max_examples=60)
    def test_floor(self, x):
        n = x.floor()
        assert Scalar(n) <= x < Scalar(n + 1)
        assert x.ceil() == -((-x).floor())


class TestConversions:
    def test_to_float_sqrt3_half(self):
        assert Scalar(0, rat(1, 2)).to_float() == pytest.approx(0.8660254037844386, abs=1e-15)

    def test_to_float_one(self):
        assert Scalar(1).to_float() == 1.0

    def test_to_float_minus_third(self):
        assert Scalar(rat(-1, 3)).to_float() == pytest.approx(-1 / 3, abs=1e-15)

    @given(scalars)
    @settings(max_examples=60)
    def test_to_float_within_2_ulp(self, x):
        f = x.to_float()
        exact = float(x.a) + float(x.b) * math.sqrt(3)
        assert f == pytest.approx(exact, abs=4 * abs(math.ulp(f)) + 1e-300)

    def test_as_rational(self):
        assert Scalar(rat(2, 3)).as_rational() == rat(2, 3)
        with pytest.raises(ValueError):
            SQRT3.as_rational()


class TestText:
    def test_round_trip_rational(self):
        s = Scalar(rat(-1, 3))
        assert s.to_text() == "-1/3"
        assert Scalar.parse("-1/3") == s

    def test_round_trip_with_root(self):
        s = Scalar(rat(1, 3), rat(-1, 2))
        assert s.to_text() == "1/3-1/2√3"
        assert Scalar.parse("1/3-1/2√3") == s

    @given(scalars)
    @settings(max_examples=60)
    def test_parse_inverts_to_text(self, x):
        assert Scalar.parse(x.to_text()) == x

    def test_zero_denominator_rejected(self):
        with pytest.raises(ValueError):
            Scalar.parse("1/0+0/1√3")
        with pytest.raises(ValueError):
            Scalar.parse("1/0")

    def test_garbage_rejected(self):
        for bad in ["", "x", "1", "1/2+", "1/2+1√3", "1/2 + 1/3√3x"]:
            with pytest.raises(ValueError):
                Scalar.parse(bad)


class TestHashing:
    def test_rational_scalar_hash_matches_number(self):
        assert hash(Scalar(5)) == hash(5)
        assert hash(Scalar(rat(1, 2))) == hash(Rational(1) / 2)
        assert Scalar(5) == 5

    def test_half_constant(self):
        assert HALF + HALF == ONE
