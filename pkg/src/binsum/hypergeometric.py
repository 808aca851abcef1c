"""Terminating generalized hypergeometric series over exact rationals.

A series pFq(a_1..a_p; b_1..b_q | z) terminates when some numerator parameter
is a nonpositive integer.  The sum here runs through the largest order any
such parameter imposes, so later parameters cannot silently truncate earlier
nonzero terms.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .combinatorics import Scalar, factorial, normalize_scalar, pochhammer
from .errors import NonTerminatingSeriesError, SeriesPoleError


def termination_order(numerator_params: Sequence[Scalar]) -> int:
    """Largest -a over nonpositive-integer numerator parameters a."""
    orders = []
    for a in numerator_params:
        a = normalize_scalar(Fraction(a))
        if isinstance(a, int) and a <= 0:
            orders.append(-a)
    if not orders:
        raise NonTerminatingSeriesError(
            f"no nonpositive integer among numerator parameters {list(numerator_params)}"
        )
    return max(orders)


def hyp_terminating(
    numerator_params: Sequence[Scalar],
    denominator_params: Sequence[Scalar],
    argument: Scalar,
    strict: bool = False,
) -> Scalar:
    """Sum the terminating series at `argument`.

    By default a term whose denominator Pochhammer product vanishes
    contributes zero (the 1/infinity convention for a pole sitting under a
    finite numerator).  With strict=True such a term raises SeriesPoleError
    instead, naming the term index.
    """
    order = termination_order(numerator_params)
    nums = [Fraction(a) for a in numerator_params]
    dens = [Fraction(b) for b in denominator_params]
    z = Fraction(argument)
    total = Fraction(0)
    for i in range(order + 1):
        den_product = Fraction(1)
        for b in dens:
            den_product *= pochhammer(b, i)
        if den_product == 0:
            if strict:
                raise SeriesPoleError(i)
            continue
        num_product = Fraction(1)
        for a in nums:
            num_product *= pochhammer(a, i)
        total += num_product * z**i / (den_product * factorial(i))
    return normalize_scalar(total)
