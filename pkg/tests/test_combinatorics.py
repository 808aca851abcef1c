"""Unit tests for the exact combinatorial kernels.

Oracles here are brute force: set-partition enumeration, falling-factorial
expansion by convolution, and descent counting over explicit permutations.
"""

import math
from fractions import Fraction
from itertools import permutations

import pytest

from binsum.combinatorics import (
    binomial,
    eulerian,
    factorial,
    multinomial,
    normalize_scalar,
    pochhammer,
    stirling1_signed,
    stirling2,
)


def count_set_partitions(n, k):
    """Partitions of an n-set into exactly k nonempty blocks, by recursion."""
    if n == 0:
        return 1 if k == 0 else 0
    if k <= 0:
        return 0
    # last element: own block, or joins one of k blocks
    return count_set_partitions(n - 1, k - 1) + k * count_set_partitions(n - 1, k)


def falling_factorial_coefficients(n):
    """Coefficients of z(z-1)...(z-n+1) by direct convolution."""
    coeffs = [1]
    for i in range(n):
        # multiply by (z - i)
        new = [0] * (len(coeffs) + 1)
        for d, c in enumerate(coeffs):
            new[d + 1] += c
            new[d] += -i * c
        coeffs = new
    return coeffs


def count_descents(p):
    return sum(1 for i in range(len(p) - 1) if p[i] > p[i + 1])


class TestFactorial:
    def test_examples(self):
        assert factorial(0) == 1
        assert factorial(5) == 120
        assert factorial(12) == 479001600

    def test_matches_math(self):
        for n in range(21):
            assert factorial(n) == math.factorial(n)

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            factorial(-1)


class TestBinomial:
    def test_examples(self):
        assert binomial(7, 3) == 35
        assert binomial(2, 5) == 0
        assert binomial(-3, 2) == 6
        assert binomial(Fraction(3, 2), 2) == Fraction(3, 8)

    def test_negative_bottom_is_zero(self):
        assert binomial(7, -1) == 0
        assert binomial(Fraction(1, 2), -3) == 0
        assert binomial(-4, -2) == 0

    def test_matches_comb_on_integers(self):
        for n in range(31):
            for k in range(n + 2):
                expected = math.comb(n, k) if k <= n else 0
                assert binomial(n, k) == expected

    def test_integer_results_are_ints(self):
        assert isinstance(binomial(10, 4), int)
        assert isinstance(binomial(-3, 2), int)

    def test_symmetry(self):
        for n in range(41):
            for k in range(n + 1):
                assert binomial(n, k) == binomial(n, n - k)

    def test_pascal(self):
        for n in range(41):
            for k in range(n + 2):
                assert binomial(n + 1, k) == binomial(n, k) + binomial(n, k - 1)

    def test_rational_top(self):
        # (1/2 choose 3) = (1/2)(-1/2)(-3/2)/6
        assert binomial(Fraction(1, 2), 3) == Fraction(1, 16)
        assert binomial(Fraction(-5, 2), 2) == Fraction(35, 8)


class TestPochhammer:
    def test_examples(self):
        assert pochhammer(Fraction(1, 2), 3) == Fraction(15, 8)
        assert pochhammer(Fraction(7, 3), 0) == 1
        assert pochhammer(17, 0) == 1
        assert pochhammer(-2, 4) == 0

    def test_product_rule(self):
        values = [Fraction(n, d) for n in range(-10, 11) for d in (1, 2, 3, 7)]
        for a in values[::5]:
            for m in range(11):
                for n in range(11):
                    assert pochhammer(a, m + n) == pochhammer(a, m) * pochhammer(a + m, n)

    def test_multiplication_formula(self):
        # (a)_{qr} = q^{qr} prod_{l<q} ((a+l)/q)_r
        for a in (Fraction(1, 2), Fraction(-3, 2), 2, Fraction(7, 3)):
            for q in range(1, 6):
                for r in range(7):
                    lhs = pochhammer(Fraction(a), q * r)
                    rhs = Fraction(q) ** (q * r)
                    for l in range(q):
                        rhs *= pochhammer(Fraction(Fraction(a) + l, q), r)
                    assert lhs == rhs, (a, q, r)

    def test_reversal(self):
        for n in range(21):
            for k in range(n + 1):
                expected = (-1) ** k * math.factorial(n) // math.factorial(n - k)
                assert pochhammer(-n, k) == expected
            assert pochhammer(-n, n + 1) == 0
            assert pochhammer(-n, n + 5) == 0


class TestStirling2:
    def test_examples(self):
        assert stirling2(0, 0) == 1
        assert stirling2(4, 2) == 7
        assert stirling2(3, 3) == 1

    def test_against_partition_enumeration(self):
        for n in range(8):
            for k in range(n + 1):
                assert stirling2(n, k) == count_set_partitions(n, k)

    def test_out_of_range(self):
        assert stirling2(5, -1) == 0
        assert stirling2(5, 6) == 0
        assert stirling2(0, 1) == 0


class TestStirling1Signed:
    def test_examples(self):
        assert stirling1_signed(3, 2) == -3
        assert stirling1_signed(4, 2) == 11
        for n in range(10):
            assert stirling1_signed(n, n) == 1

    def test_falling_factorial_expansion(self):
        for n in range(11):
            coeffs = falling_factorial_coefficients(n)
            for k in range(n + 1):
                assert stirling1_signed(n, k) == coeffs[k]

    def test_falling_factorial_values(self):
        for n in range(13):
            for z in range(-5, 11):
                direct = 1
                for i in range(n):
                    direct *= z - i
                rebuilt = sum(stirling1_signed(n, k) * z**k for k in range(n + 1))
                assert rebuilt == direct

    def test_orthogonality(self):
        # sum_j s(n,j) S2(j,k) = [n == k]
        for n in range(13):
            for k in range(13):
                total = sum(stirling1_signed(n, j) * stirling2(j, k) for j in range(n + 1))
                assert total == (1 if n == k else 0)

    def test_out_of_range(self):
        assert stirling1_signed(4, -1) == 0
        assert stirling1_signed(4, 5) == 0


class TestEulerian:
    def test_examples(self):
        assert eulerian(3, 1) == 4
        assert eulerian(4, 2) == 11
        for n in range(1, 10):
            assert eulerian(n, 0) == 1

    def test_against_descent_counting(self):
        for n in range(1, 7):
            counts = {}
            for p in permutations(range(n)):
                d = count_descents(p)
                counts[d] = counts.get(d, 0) + 1
            for k in range(n):
                assert eulerian(n, k) == counts.get(k, 0)

    def test_row_sums(self):
        for n in range(1, 11):
            assert sum(eulerian(n, k) for k in range(n)) == math.factorial(n)

    def test_out_of_range(self):
        assert eulerian(3, 3) == 0
        assert eulerian(3, -1) == 0


class TestMultinomial:
    def test_examples(self):
        assert multinomial(3, (1, 1, 1)) == 6
        assert multinomial(4, (2, 2)) == 6
        assert multinomial(5, (2, 2, 1)) == 30

    def test_factorial_ratio(self):
        parts = (3, 1, 4, 2)
        expected = math.factorial(10)
        for p in parts:
            expected //= math.factorial(p)
        assert multinomial(10, parts) == expected

    def test_parts_must_sum(self):
        with pytest.raises(ValueError):
            multinomial(5, (2, 2))


def test_normalize_scalar():
    assert normalize_scalar(Fraction(4, 2)) == 2
    assert isinstance(normalize_scalar(Fraction(4, 2)), int)
    assert normalize_scalar(Fraction(1, 2)) == Fraction(1, 2)
    assert normalize_scalar(7) == 7
