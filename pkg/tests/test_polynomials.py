"""Dense exact polynomials and canonical rational functions."""

from fractions import Fraction

import pytest

from binsum.errors import NotAPowerSeriesError
from binsum.polynomials import Polynomial, RationalGF, poly_gcd


class TestPolynomial:
    def test_trailing_zeros_stripped(self):
        assert Polynomial([1, 2, 0, 0]).degree == 1
        assert Polynomial([0, 0]).degree == -1
        assert not Polynomial([])
        assert Polynomial([0, 1])

    def test_coefficient_out_of_range(self):
        p = Polynomial([3, 5])
        assert p.coefficient(0) == 3
        assert p.coefficient(1) == 5
        assert p.coefficient(7) == 0

    def test_arithmetic(self):
        one_plus = Polynomial([1, 1])
        one_minus = Polynomial([1, -1])
        assert one_plus * one_minus == Polynomial([1, 0, -1])
        assert Polynomial([1, 2]) * 3 == Polynomial([3, 6])
        assert one_plus + one_minus == Polynomial([2])
        assert one_plus - one_plus == Polynomial()
        assert -one_minus == Polynomial([-1, 1])

    def test_pow(self):
        assert Polynomial([1, 1]) ** 4 == Polynomial([1, 4, 6, 4, 1])
        assert Polynomial([2, 1]) ** 0 == Polynomial([1])

    def test_call_is_horner(self):
        p = Polynomial([1, -3, 2])
        assert p(0) == 1
        assert p(Fraction(1, 2)) == 0
        assert p(1) == 0

    def test_compose_linear(self):
        # z -> 2z in (1 + z), then z -> 1 + z in z^2
        assert Polynomial([1, 1]).compose_linear(0, 2) == Polynomial([1, 2])
        assert Polynomial([0, 0, 1]).compose_linear(1, 1) == Polynomial([1, 2, 1])

    def test_divmod_exact(self):
        product = Polynomial([1, 2]) * Polynomial([3, 0, 1])
        quotient, remainder = divmod(product, Polynomial([1, 2]))
        assert quotient == Polynomial([3, 0, 1])
        assert not remainder

    def test_divmod_with_remainder(self):
        quotient, remainder = divmod(Polynomial([1, 0, 1]), Polynomial([1, 1]))
        assert quotient * Polynomial([1, 1]) + remainder == Polynomial([1, 0, 1])
        assert remainder.degree < 1

    def test_derivative(self):
        assert Polynomial([5, 3, 0, 2]).derivative() == Polynomial([3, 0, 6])

    def test_monomial(self):
        assert Polynomial.monomial(3, 2) == Polynomial([0, 0, 3])

    def test_render(self):
        assert Polynomial([1, -3, -1]).render() == "1 - 3*z - z^2"
        assert Polynomial([0, 1]).render("x") == "x"
        assert Polynomial([0, 0, 5]).render() == "5*z^2"
        assert Polynomial().render() == "0"
        assert Polynomial([Fraction(1, 2), 1]).render() == "1/2 + z"


def test_poly_gcd():
    a = Polynomial([1, 0, -1])  # (1-z)(1+z)
    b = Polynomial([1, -2, 1])  # (1-z)^2
    g = poly_gcd(a, b)
    # monic in the leading coefficient, so (z - 1) up to sign convention
    assert g.degree == 1
    _, r1 = divmod(a, g)
    _, r2 = divmod(b, g)
    assert not r1 and not r2


class TestRationalGFCanonical:
    def test_sign_normalization(self):
        # -1/(-1+2z) and 1/(1-2z) are the same object
        assert RationalGF([-1], [-1, 2]) == RationalGF([1], [1, -2])

    def test_content_cleared(self):
        f = RationalGF([Fraction(1, 2), Fraction(1, 2)], [1])
        assert f.numerator == Polynomial([1, 1])
        assert f.denominator == Polynomial([2])

    def test_common_factor_removed(self):
        f = RationalGF([1, 0, -1], [1, -1])  # (1-z^2)/(1-z)
        assert f == RationalGF([1, 1], [1])

    def test_integer_primitive(self):
        f = RationalGF([2, 2], [4])
        assert f.numerator == Polynomial([1, 1])
        assert f.denominator == Polynomial([2])

    def test_hashable(self):
        assert len({RationalGF([1], [1, 2]), RationalGF([1], [1, 3])}) == 2
        # equivalent presentations collapse to one canonical value
        assert len({RationalGF([1], [1, 2]), RationalGF([2], [2, 4])}) == 1
        assert len({RationalGF([1], [1, 2]), RationalGF([-1], [-1, -2])}) == 1

    def test_zero_denominator_rejected(self):
        with pytest.raises(ZeroDivisionError):
            RationalGF([1], [0])


class TestRationalGFSeries:
    def test_geometric(self):
        assert RationalGF([1], [1, 2]).series(4) == [1, -2, 4, -8]
        assert RationalGF([1], [1, -1]).series(3) == [1, 1, 1]

    def test_table_row(self):
        f = RationalGF([1, -1], Polynomial([1, 2]) ** 2)
        assert f.series(5) == [1, -5, 16, -44, 112]

    def test_rational_coefficients(self):
        f = RationalGF([8, 1], 2 * Polynomial([2, 1]) ** 2)
        assert f.series(4) == [1, Fraction(-7, 8), Fraction(5, 8), Fraction(-13, 32)]

    def test_no_expansion_at_pole(self):
        with pytest.raises(NotAPowerSeriesError):
            RationalGF([1], [0, 1]).series(3)

    def test_length_validated(self):
        with pytest.raises(ValueError):
            RationalGF([1], [1, 1]).series(0)


class TestRationalGFArithmetic:
    def test_add(self):
        half = RationalGF([1], [2])
        assert half + half == RationalGF([1], [1])

    def test_mul_div(self):
        f = RationalGF([1], [1, -1])
        g = RationalGF([1, -1], [1])
        assert f * g == RationalGF([1], [1])
        assert f / f == RationalGF([1], [1])

    def test_mul_by_polynomial(self):
        f = RationalGF([1], [1, -2])
        assert f * Polynomial([0, 1]) == RationalGF([0, 1], [1, -2])

    def test_sub_neg(self):
        f = RationalGF([3], [1, 1])
        assert f - f == RationalGF([0], [1])
        assert -f == RationalGF([-3], [1, 1])


class TestRender:
    def test_plain_denominator(self):
        assert RationalGF([1], [1, 3]).render() == "1/(1 + 3*z)"

    def test_power_denominator(self):
        f = RationalGF([1, -3, -1], Polynomial([1, 2]) ** 3)
        assert f.render() == "(1 - 3*z - z^2)/(1 + 2*z)^3"

    def test_scaled_power_denominator(self):
        f = RationalGF([8, 1], 2 * Polynomial([2, 1]) ** 2)
        assert f.render() == "(8 + z)/(2*(2 + z)^2)"

    def test_polynomial_only(self):
        assert RationalGF([1, 1], [1]).render() == "1 + z"

    def test_alternate_variable(self):
        assert RationalGF([1, 2], [1, -1]).render("x") == "(1 + 2*x)/(1 - x)"

    def test_non_power_denominator_parenthesized(self):
        f = RationalGF([1], [1, 1, 1])
        assert f.render() == "1/(1 + z + z^2)"
