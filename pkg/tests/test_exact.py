"""Unit tests for rationals, t-polynomials, and Gaussian rationals."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tmzv.exact import (
    GaussianRational,
    ONE_MINUS_2T,
    POLY_ONE,
    POLY_T,
    POLY_ZERO,
    T2_MINUS_T,
    TPoly,
    binom,
    factorial,
    format_rational,
    parse_rational,
    rat_add,
    rat_div,
    rat_mul,
    rat_neg,
)

rationals = st.fractions(min_value=-100, max_value=100, max_denominator=100)
small_polys = st.lists(
    st.fractions(min_value=-9, max_value=9, max_denominator=9), max_size=5
).map(TPoly)


class TestRationals:
    def test_add(self):
        assert rat_add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)

    def test_normalization(self):
        q = Fraction(2, 4)
        assert (q.numerator, q.denominator) == (1, 2)
        assert format_rational(q) == "1/2"

    def test_inverse_pair(self):
        assert rat_mul(Fraction(-3, 7), Fraction(7, 3)) == Fraction(-1)

    def test_neg(self):
        assert rat_neg(Fraction(5, 3)) == Fraction(-5, 3)

    def test_div(self):
        assert rat_div(Fraction(1, 2), Fraction(3, 4)) == Fraction(2, 3)

    def test_div_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            rat_div(Fraction(1), Fraction(0))

    def test_format_always_carries_denominator(self):
        assert format_rational(Fraction(3)) == "3/1"
        assert format_rational(Fraction(-2, 5)) == "-2/5"

    def test_parse(self):
        assert parse_rational("5/6") == Fraction(5, 6)
        assert parse_rational("-7") == Fraction(-7)
        with pytest.raises(ValueError):
            parse_rational("1.5/2x")

    @given(rationals, rationals)
    def test_parse_format_roundtrip(self, a, b):
        assert parse_rational(format_rational(a)) == a

    @given(rationals, rationals, rationals)
    def test_field_laws(self, a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


class TestFactorialBinom:
    def test_factorial(self):
        assert factorial(0) == 1
        assert factorial(5) == 120
        with pytest.raises(ValueError):
            factorial(-1)

    def test_binom_basic(self):
        assert binom(4, 2) == 6

    def test_binom_zero_convention(self):
        assert binom(2, 3) == 0
        assert binom(-1, 0) == 0
        assert binom(5, -1) == 0

    def test_binom_values_used_by_halving_relation(self):
        assert binom(5, 2) == 10
        assert binom(6, 3) == 20

    @pytest.mark.parametrize("k", [2, 4, 6, 8, 12])
    def test_central_halving_relation(self, k):
        # binom(k, k/2) = 2 binom(k-1, k/2 - 1) for even k
        assert binom(k, k // 2) == 2 * binom(k - 1, k // 2 - 1)


class TestTPoly:
    def test_expansion(self):
        assert ONE_MINUS_2T * ONE_MINUS_2T == TPoly((1, -4, 4))

    def test_cancellation_gives_empty_storage(self):
        out = T2_MINUS_T + TPoly((0, 1, -1))
        assert out == POLY_ZERO
        assert out.coeffs == ()

    def test_trailing_zeros_stripped(self):
        assert TPoly((1, 0, 0)).coeffs == (Fraction(1),)
        assert TPoly((1, 2)).degree == 1
        assert POLY_ZERO.degree == -1

    def test_roots_and_eval(self):
        assert ONE_MINUS_2T.eval(Fraction(1, 2)) == 0
        assert ONE_MINUS_2T.eval(Fraction(0)) == 1
        assert ONE_MINUS_2T.eval(Fraction(1)) == -1
        assert T2_MINUS_T.eval(Fraction(1)) == 0

    def test_eval_float(self):
        assert ONE_MINUS_2T.eval_float(0.5) == 0.0
        assert abs(T2_MINUS_T.eval_float(0.5) + 0.25) < 1e-15

    def test_pow(self):
        assert ONE_MINUS_2T**0 == POLY_ONE
        assert ONE_MINUS_2T**2 == ONE_MINUS_2T * ONE_MINUS_2T

    def test_scalar_mul(self):
        assert POLY_T * 2 == TPoly((0, 2))
        assert POLY_T * Fraction(1, 2) == TPoly((0, Fraction(1, 2)))

    def test_str(self):
        assert str(ONE_MINUS_2T) == "1 - 2t"
        assert str(T2_MINUS_T) == "-t + t^2"
        assert str(POLY_ZERO) == "0"
        assert str(TPoly((Fraction(1, 2),))) == "1/2"

    def test_json_roundtrip(self):
        p = TPoly((1, Fraction(-2, 3), 0, 5))
        assert TPoly.from_json(p.to_json()) == p
        assert p.to_json() == ["1/1", "-2/3", "0/1", "5/1"]

    @given(small_polys, small_polys)
    def test_degree_additive(self, p, q):
        if p.is_zero or q.is_zero:
            assert (p * q).is_zero
        else:
            assert (p * q).degree == p.degree + q.degree

    @given(small_polys, small_polys, rationals)
    def test_eval_is_ring_homomorphism(self, p, q, t0):
        assert (p * q).eval(t0) == p.eval(t0) * q.eval(t0)
        assert (p + q).eval(t0) == p.eval(t0) + q.eval(t0)


class TestGaussianRational:
    def test_i_squared(self):
        i = GaussianRational.i_power(1)
        assert i * i == GaussianRational(Fraction(-1))

    def test_i_power_cycle(self):
        assert GaussianRational.i_power(0) == GaussianRational(Fraction(1))
        assert GaussianRational.i_power(5) == GaussianRational.i_power(1)
        assert GaussianRational.i_power(7) == GaussianRational(Fraction(0), Fraction(-1))

    def test_mul(self):
        a = GaussianRational(Fraction(1, 2), Fraction(1))
        b = GaussianRational(Fraction(2), Fraction(-3))
        assert a * b == GaussianRational(Fraction(4), Fraction(1, 2))

    def test_is_real(self):
        assert GaussianRational(Fraction(3)).is_real
        assert not GaussianRational(Fraction(0), Fraction(1)).is_real
