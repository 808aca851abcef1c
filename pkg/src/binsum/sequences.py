"""The three sequence families and the identities relating them.

Families, in the notation used throughout the package:

  a(k, q; m) = sum_{j=0..m} sum_{i=0..j} (-1)^(j-i) C(m,j) C(j,i) C(j+k+q*i, j+k)
  b(k, q; j) = sum_{i=0..j} (-1)^i C(j,i) C(j+k+q*i, j+k)
  c(J, q; i) = C(J+q*i, J)

a is the inverse binomial transform of b, collapses to a single sum, and both
a and b have terminating hypergeometric forms for integer q.  Every family
therefore has at least two independent evaluation routes, which the
verification suites compare exactly.
"""

from __future__ import annotations

from fractions import Fraction

from .combinatorics import (
    Scalar,
    binomial,
    factorial,
    multinomial,
    normalize_scalar,
    stirling2,
)
from .errors import UnsupportedParameterError
from .hypergeometric import hyp_terminating


def _check_nonnegative(name: str, value: int) -> int:
    if not isinstance(value, int) or value < 0:
        raise ValueError(f"{name} must be a nonnegative integer, got {value!r}")
    return value


def _check_q(q: Scalar) -> Scalar:
    q = normalize_scalar(Fraction(q))
    if q < 0:
        raise ValueError(f"q must be nonnegative, got {q}")
    return q


def _require_integer_q(q: Scalar, context: str) -> int:
    q = _check_q(q)
    if not isinstance(q, int):
        raise UnsupportedParameterError(f"{context} requires integer q, got {q}")
    return q


def as_integer(value: Scalar) -> int:
    """Assert a provably integral value really is integral and return it as int."""
    value = normalize_scalar(value)
    if not isinstance(value, int):
        raise ValueError(f"expected an integer value, got {value}")
    return value


def a_double_sum(k: int, q: Scalar, m: int) -> Scalar:
    """The defining double sum for a(k, q; m).  Rational q is allowed."""
    _check_nonnegative("k", k)
    _check_nonnegative("m", m)
    q = _check_q(q)
    total: Scalar = 0
    for j in range(m + 1):
        outer = binomial(m, j)
        for i in range(j + 1):
            total += (-1) ** (j - i) * outer * binomial(j, i) * binomial(j + k + q * i, j + k)
    return normalize_scalar(total)


def a_single_sum(k: int, q: Scalar, m: int) -> Scalar:
    """Single-sum reduction: sum_i (-1)^(m-i) C(m,i) C(k+(q+1)i, k+m).

    Equals a_double_sum for integer q; for rational q the agreement is an
    observation the verifier reports, not a guarantee.
    """
    _check_nonnegative("k", k)
    _check_nonnegative("m", m)
    q = _check_q(q)
    total: Scalar = 0
    for i in range(m + 1):
        total += (-1) ** (m - i) * binomial(m, i) * binomial(k + (q + 1) * i, k + m)
    return normalize_scalar(total)


def b_direct(k: int, q: Scalar, j: int) -> Scalar:
    """The defining alternating sum for b(k, q; j).  Rational q is allowed."""
    _check_nonnegative("k", k)
    _check_nonnegative("j", j)
    q = _check_q(q)
    total: Scalar = 0
    for i in range(j + 1):
        total += (-1) ** i * binomial(j, i) * binomial(j + k + q * i, j + k)
    return normalize_scalar(total)


def a_from_b(k: int, q: Scalar, m: int) -> Scalar:
    """a as the sign-alternating binomial transform of b: sum_j (-1)^j C(m,j) b(j)."""
    _check_nonnegative("m", m)
    total: Scalar = 0
    for j in range(m + 1):
        total += (-1) ** j * binomial(m, j) * b_direct(k, q, j)
    return normalize_scalar(total)


def b_k1_closed(k: int, j: int) -> int:
    """Closed form at q=1: b(k, 1; j) = C(-k-1, j) = (-1)^j C(k+j, j)."""
    _check_nonnegative("k", k)
    _check_nonnegative("j", j)
    return binomial(-k - 1, j)


def c_direct(J: int, q: int, i: int) -> int:
    """The stepped binomial c(J, q; i) = C(J + q*i, J)."""
    _check_nonnegative("J", J)
    _check_nonnegative("q", q)
    _check_nonnegative("i", i)
    return binomial(J + q * i, J)


def a_hypergeom(k: int, q: int, m: int, strict: bool = False) -> Scalar:
    """a(k, q; m) through its terminating (q+2)F(q+1) form; integer q only.

    The front factor is C(m(q+1)+k, k+m); the series parameters are
    -m and 1-(l+1-m)/(q+1)-m over 1-(k+1+l)/(q+1)-m for l = 0..q, evaluated
    at unit argument with the zero-denominator convention of hyp_terminating.
    """
    _check_nonnegative("k", k)
    _check_nonnegative("m", m)
    q = _require_integer_q(q, "a_hypergeom")
    front = binomial(m * (q + 1) + k, k + m)
    numerator_params = [Fraction(-m)]
    numerator_params += [1 - Fraction(l + 1 - m, q + 1) - m for l in range(q + 1)]
    denominator_params = [1 - Fraction(k + 1 + l, q + 1) - m for l in range(q + 1)]
    return normalize_scalar(
        front * hyp_terminating(numerator_params, denominator_params, 1, strict=strict)
    )


def b_hypergeom(k: int, q: int, j: int, strict: bool = False) -> Scalar:
    """b(k, q; j) through its terminating (q+1)Fq form; integer q >= 1 only.

    Parameters are -j and (k+j+l)/q for l = 1..q over l/q for l = 1..q, at
    unit argument.  All denominator parameters are positive, so no poles.
    """
    _check_nonnegative("k", k)
    _check_nonnegative("j", j)
    q = _require_integer_q(q, "b_hypergeom")
    if q < 1:
        raise UnsupportedParameterError("b_hypergeom requires q >= 1")
    numerator_params = [Fraction(-j)] + [Fraction(k + j + l, q) for l in range(1, q + 1)]
    denominator_params = [Fraction(l, q) for l in range(1, q + 1)]
    return normalize_scalar(
        hyp_terminating(numerator_params, denominator_params, 1, strict=strict)
    )


def zero_sum_identity(j: int, q: int) -> int:
    """sum_{i=0..j+1} (-1)^i C(j+1,i) C(j+i*q, j); identically zero."""
    _check_nonnegative("j", j)
    if not isinstance(q, int) or q < 1:
        raise ValueError(f"q must be a positive integer, got {q!r}")
    return sum((-1) ** i * binomial(j + 1, i) * binomial(j + i * q, j) for i in range(j + 2))


def beta_integral(j: int, q: int) -> Fraction:
    """Exact value of the integral of t^j ((1-t^q)/(1-t))^(j+1) over [0, 1].

    Expands (1 + t + ... + t^(q-1))^(j+1) by the multinomial theorem and
    integrates termwise: each composition j_0+...+j_{q-1} = j+1 contributes
    multinomial(j+1; parts) / (1 + j + j_1 + 2 j_2 + ... + (q-1) j_{q-1}).
    Always a positive rational.
    """
    _check_nonnegative("j", j)
    if not isinstance(q, int) or q < 1:
        raise ValueError(f"q must be a positive integer, got {q!r}")
    total = Fraction(0)
    for parts in _compositions(j + 1, q):
        weight = sum(l * parts[l] for l in range(q))
        total += Fraction(multinomial(j + 1, parts), 1 + j + weight)
    return total


def _compositions(total: int, count: int):
    """Yield all tuples of `count` nonnegative integers summing to `total`."""
    if count == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, count - 1):
            yield (first,) + rest


def power_via_stirling(base: int, n: int) -> int:
    """base^n rebuilt as sum_j S2(n,j) C(base,j) j!."""
    _check_nonnegative("base", base)
    _check_nonnegative("n", n)
    return sum(stirling2(n, j) * binomial(base, j) * factorial(j) for j in range(n + 1))
