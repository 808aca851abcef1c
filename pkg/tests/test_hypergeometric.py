"""Terminating hypergeometric series evaluation."""

from fractions import Fraction

import pytest

from binsum.errors import NonTerminatingSeriesError, SeriesPoleError
from binsum.hypergeometric import hyp_terminating, termination_order
from binsum.combinatorics import pochhammer


def test_termination_order_single():
    assert termination_order([-4]) == 4
    assert termination_order([0]) == 0


def test_termination_order_most_negative_wins():
    # the series formally runs to the most negative parameter; terms past
    # the smaller magnitude are zero anyway
    assert termination_order([-2, -5]) == 5
    assert termination_order([-5, Fraction(1, 2), -1]) == 5


def test_termination_order_requires_nonpositive_integer():
    with pytest.raises(NonTerminatingSeriesError):
        termination_order([Fraction(1, 2), 3])
    with pytest.raises(NonTerminatingSeriesError):
        termination_order([])
    with pytest.raises(NonTerminatingSeriesError):
        termination_order([Fraction(-1, 2)])


def test_2f1_collapses_to_binomial_power():
    # 2F1(-2, 1; 1; 1) sums (1-z)^2 at z=1
    assert hyp_terminating([-2, 1], [1], 1) == 0


def test_2f1_three_term_sum():
    assert hyp_terminating([-2, 1], [3], 1) == Fraction(1, 2)


def test_1f0_power():
    assert hyp_terminating([-3], [], 1) == 0
    assert hyp_terminating([-3], [], Fraction(1, 2)) == Fraction(1, 8)


def test_chu_vandermonde():
    # 2F1(-n, b; c; 1) = (c-b)_n / (c)_n
    for n in range(8):
        for b in (1, 2, Fraction(1, 2), Fraction(-3, 2)):
            for c in (Fraction(7, 2), 5, Fraction(13, 3)):
                lhs = hyp_terminating([-n, b], [c], 1)
                rhs = Fraction(pochhammer(c - b, n), pochhammer(c, n))
                assert lhs == rhs, (n, b, c)


def test_strict_mode_reports_pole_index():
    # denominator (-1)_i vanishes from i = 2 on
    with pytest.raises(SeriesPoleError) as info:
        hyp_terminating([-3, 1], [-1], 1, strict=True)
    assert info.value.term_index == 2


def test_regularized_mode_zeroes_pole_terms():
    # i = 0, 1 contribute 1 and 3; later terms hit the zero denominator
    assert hyp_terminating([-3, 1], [-1], 1) == 4


def test_zero_denominator_beats_zero_numerator():
    # at i = 3 numerator and denominator Pochhammers both vanish; the
    # denominator check comes first, so the 0/0 term contributes 0
    # (terms 1, -3, 3, then nothing) and strict mode still sees a pole
    assert hyp_terminating([-2, -3], [-2], 1) == 1
    with pytest.raises(SeriesPoleError) as info:
        hyp_terminating([-2, -3], [-2], 1, strict=True)
    assert info.value.term_index == 3


def test_rational_argument():
    # 1F0(-n; ; z) = (1 - z)^n
    for n in range(6):
        for z in (Fraction(1, 3), Fraction(-2, 5), 2):
            assert hyp_terminating([-n], [], z) == (1 - Fraction(z)) ** n
