"""Dense polynomial arithmetic, division, gcd, and rational functions."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from polytangent.polynomial import (
    ONE,
    X,
    ZERO,
    LinearFunction,
    Polynomial,
    RationalFunction,
    cross_multiplied_equal,
    polynomial_gcd,
)

coeffs = st.fractions(min_value=-9, max_value=9, max_denominator=9)
polys = st.builds(Polynomial, st.lists(coeffs, max_size=9))
points = st.fractions(min_value=-9, max_value=9, max_denominator=9)


class TestStructure:
    def test_trailing_zeros_are_stripped(self):
        assert Polynomial([1, 2, 0, 0]).coeffs == (1, 2)

    def test_zero_polynomial(self):
        assert Polynomial([0, 0]).coeffs == ()
        assert Polynomial().degree is None
        assert not Polynomial()

    def test_degree(self):
        assert Polynomial([5]).degree == 0
        assert (X**7).degree == 7

    def test_floats_are_rejected(self):
        with pytest.raises(TypeError):
            Polynomial([0.5])
        with pytest.raises(TypeError):
            X + 0.5

    @given(polys)
    def test_normalized_leading_coefficient(self, f):
        if f:
            assert f.coeffs[-1] != 0


class TestRingOperations:
    def test_add_cancellation_renormalizes(self):
        assert (X**2 + 1) + (-(X**2) + X) == X + 1

    def test_add_identity(self):
        f = X**3 - 2 * X
        assert f + ZERO == f
        assert X + X == 2 * X

    def test_mul(self):
        assert (X - 2) * (X - 3) == X**2 - 5 * X + 6
        f = X**4 + Fraction(1, 2)
        assert f * ONE == f
        assert (X - 3) ** 2 * ONE == X**2 - 6 * X + 9

    def test_mul_degree_adds(self):
        assert ((X**3 + 1) * (X**2 - 4)).degree == 5

    @given(polys, polys, polys)
    def test_ring_laws(self, f, g, h):
        assert (f + g) + h == f + (g + h)
        assert f + g == g + f
        assert f * g == g * f
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h

    @given(polys, polys, points)
    def test_evaluation_homomorphism(self, f, g, p):
        assert (f * g)(p) == f(p) * g(p)
        assert (f + g)(p) == f(p) + g(p)

    @given(polys, polys, points)
    def test_composition_evaluation_compatibility(self, f, g, p):
        assert f(g)(p) == f(g(p))


class TestEvaluation:
    def test_examples(self):
        assert (X**2)(Fraction(3)) == 9
        assert ZERO(Fraction(12, 7)) == 0
        assert (X**3)(Fraction(1, 2)) == Fraction(1, 8)


class TestDivision:
    def test_exact_division(self):
        q, r = divmod(X**2 - 6 * X + 9, (X - 3) ** 2)
        assert (q, r) == (ONE, ZERO)

    def test_division_with_remainder(self):
        q, r = divmod(X**2 - 5 * X + 6, (X - 3) ** 2)
        assert (q, r) == (ONE, X - 3)

    def test_small_by_large(self):
        q, r = divmod(X, X**2)
        assert (q, r) == (ZERO, X)

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            divmod(X, ZERO)

    @given(polys, polys.filter(bool))
    def test_division_identity(self, f, g):
        q, r = divmod(f, g)
        assert q * g + r == f
        assert not r or r.degree < g.degree


class TestComposition:
    def test_examples(self):
        assert (X**2)(X + 1) == X**2 + 2 * X + 1
        g = 3 * X**2 - Fraction(1, 2)
        assert X(g) == g
        assert (X**3)(2 * X) == 8 * X**3


class TestGcd:
    def test_examples(self):
        assert polynomial_gcd(X**2 - 1, X - 1) == X - 1
        f = 3 * X**2 + 6
        assert polynomial_gcd(f, ZERO) == f.monic()
        assert polynomial_gcd(X**2 - 5 * X + 6, X**2 - 6 * X + 9) == X - 3

    def test_both_zero(self):
        with pytest.raises(ValueError):
            polynomial_gcd(ZERO, ZERO)

    @given(polys, polys)
    def test_gcd_divides_both(self, f, g):
        if not f and not g:
            return
        d = polynomial_gcd(f, g)
        assert f % d == ZERO
        assert g % d == ZERO


class TestPower:
    def test_pow(self):
        assert X**0 == ONE
        assert (X + 1) ** 2 == X**2 + 2 * X + 1
        with pytest.raises(ValueError):
            X ** (-1)


class TestRendering:
    @pytest.mark.parametrize(
        "poly,text",
        [
            (X**2 - 5 * X + 6, "x^2 - 5*x + 6"),
            (Fraction(-1, 2) * X**3 + X, "-1/2*x^3 + x"),
            (Fraction(1, 2) * X**3 - X, "1/2*x^3 - x"),
            (ZERO, "0"),
            (Polynomial([Fraction(7, 2)]), "7/2"),
            (-X, "-x"),
            (X, "x"),
            (2 * X, "2*x"),
        ],
    )
    def test_canonical_text(self, poly, text):
        assert str(poly) == text

    def test_alternate_variable(self):
        assert (X**2 + 1).render("t") == "t^2 + 1"


class TestLinearFunction:
    def test_as_polynomial(self):
        line = LinearFunction(6, -9)
        assert line.as_polynomial() == 6 * X - 9
        assert line(Fraction(3)) == 9
        assert line.equation() == "y = 6*x - 9"

    def test_horizontal_line_is_legal(self):
        assert LinearFunction(0, 5).equation() == "y = 5"


class TestRationalFunction:
    def test_common_factor_cancels(self):
        r = RationalFunction(X**2 - 1, X - 1)
        assert r.num == X + 1
        assert r.den == ONE

    def test_polynomial_stays(self):
        r = RationalFunction(X**2 + 1)
        assert (r.num, r.den) == (X**2 + 1, ONE)

    def test_scalar_normalization(self):
        r = RationalFunction(2 * X, Polynomial([2]))
        assert (r.num, r.den) == (X, ONE)

    def test_monic_denominator(self):
        r = RationalFunction(ONE, 2 * X)
        assert r.den == X
        assert r.num == Polynomial([Fraction(1, 2)])

    def test_zero_denominator(self):
        with pytest.raises(ZeroDivisionError):
            RationalFunction(X, ZERO)

    def test_zero_is_canonical(self):
        r = RationalFunction(ZERO, X**2 + 1)
        assert (r.num, r.den) == (ZERO, ONE)

    def test_equality(self):
        assert RationalFunction(X + 1) == RationalFunction(X**2 - 1, X - 1)
        assert RationalFunction(X) != RationalFunction(X + 1)
        assert RationalFunction(ZERO, X**2 + 1) == RationalFunction(ZERO)

    @given(polys, polys.filter(bool), polys, polys.filter(bool))
    def test_equality_matches_cross_multiplication(self, a, b, c, d):
        r = RationalFunction(a, b)
        s = RationalFunction(c, d)
        assert (r == s) == cross_multiplied_equal(r, s)

    def test_field_arithmetic(self):
        half = RationalFunction(ONE, 2 * X)
        assert half + half == RationalFunction(ONE, X)
        assert RationalFunction(X) * RationalFunction(ONE, X) == RationalFunction(ONE)
        with pytest.raises(ZeroDivisionError):
            RationalFunction(ONE) / RationalFunction(ZERO)

    @pytest.mark.parametrize(
        "r,text",
        [
            (RationalFunction(Polynomial([-1]), X**2), "-1/x^2"),
            (RationalFunction(X + 1, X - 1), "(x + 1)/(x - 1)"),
            (RationalFunction(X + 1), "x + 1"),
            (RationalFunction(ONE, X), "1/x"),
        ],
    )
    def test_rendering(self, r, text):
        assert str(r) == text
