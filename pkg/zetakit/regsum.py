"""
Regular functions and the summation method built on them.

A function f on the integers is regular when it has an antidifference F with
``F(x+1) - F(x) = f(x)``. For such functions the sum over any segment ``Z_{a,b}`` of the
reordered integer line is ``F(b+1) - F(a)``, for every pair of integers. When the segment is
infinite the result is the value the method assigns to a divergent sum; those results are
returned as :class:`MethodValue` so they never mix silently with classical sums.

Only polynomial regular functions are constructed here, with antidifferences built from
Bernoulli polynomials.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from zetakit.exactnum import RationalLike, RationalPolynomial, bernoulli_plus, bernoulli_poly
from zetakit.shared_types import ErrorCode, ZetaKitError

# Global module logger
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MethodValue:
    """
    The value the summation method assigns to a (possibly divergent) sum.

    Supports addition, subtraction and scaling by rationals. A MethodValue never compares
    equal to a plain number; use :attr:`value` to leave the method's world explicitly.
    """
    value: Fraction

    def __post_init__(self):
        object.__setattr__(self, "value", Fraction(self.value))

    def __add__(self, other: MethodValue) -> MethodValue:
        if not isinstance(other, MethodValue):
            return NotImplemented
        return MethodValue(self.value + other.value)

    def __sub__(self, other: MethodValue) -> MethodValue:
        if not isinstance(other, MethodValue):
            return NotImplemented
        return MethodValue(self.value - other.value)

    def __neg__(self) -> MethodValue:
        return MethodValue(-self.value)

    def scale(self, factor: RationalLike) -> MethodValue:
        """Axiom A3: multiplying the summand by a constant scales the sum."""
        return MethodValue(self.value * Fraction(factor))

    def __str__(self):
        return str(self.value)


def antidifference(f: RationalPolynomial) -> RationalPolynomial:
    """
    Antidifference F of a polynomial f, normalised to F(0) = 0.

    Built monomial-wise from ``x^k -> B_{k+1}(x) / (k+1)``.

    Example:
        >>> antidifference(RationalPolynomial([0, 1])).coefficients
        (Fraction(0, 1), Fraction(-1, 2), Fraction(1, 2))
    """
    result = RationalPolynomial.zero()
    for k, c in f:
        result = result + bernoulli_poly(k + 1).scale(c / (k + 1))
    return result - result.coefficient(0)


@dataclass(frozen=True)
class RegularFunction:
    """
    A polynomial ``f`` together with its antidifference ``F`` (``F(0) = 0``).

    Use :meth:`from_polynomial` to derive F, or :meth:`from_pair` to supply one.
    """
    f: RationalPolynomial
    F: RationalPolynomial

    @classmethod
    def from_polynomial(cls, f: RationalPolynomial) -> RegularFunction:
        return cls(f, antidifference(f))

    @classmethod
    def from_pair(cls, f: RationalPolynomial, F: RationalPolynomial) -> RegularFunction:
        """
        Accepts an externally supplied antidifference after checking
        ``F(x+1) - F(x) = f(x)`` as a polynomial identity. A constant term of F is dropped.

        Raises:
            ZetaKitError: ``NOT_AN_ANTIDIFFERENCE`` if the identity fails.
        """
        if F.shift(1) - F != f:
            raise ZetaKitError(ErrorCode.NOT_AN_ANTIDIFFERENCE)
        return cls(f, F - F.coefficient(0))


def finite_sum(rf: RegularFunction, a: int, b: int) -> MethodValue:
    """
    Sum of f over ``Z_{a,b}``: ``F(b+1) - F(a)``, valid for every integer pair.

    For a standard segment this is the ordinary sum; for a wrapped one it is the method
    value of the infinite sum.

    Example:
        >>> u = RegularFunction.from_polynomial(RationalPolynomial([0, 1]))
        >>> finite_sum(u, 1, 3).value
        Fraction(6, 1)
    """
    return MethodValue(rf.F(b + 1) - rf.F(a))


def divergent_power_sum(k: int) -> MethodValue:
    """
    Method value of ``sum_{u>=1} u^k``, namely ``-B+_{k+1} / (k+1)``.

    Vanishes for every even k >= 2 (the trivial zeros of zeta).
    """
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    return MethodValue(-bernoulli_plus(k + 1) / (k + 1))


def divergent_alt_power_sum(k: int) -> MethodValue:
    """
    Method value of ``sum_{u>=1} (-1)^(u-1) u^k`` = ``(1 - 2^(1+k)) * divergent_power_sum(k)``.
    """
    return divergent_power_sum(k).scale(1 - 2 ** (1 + k))


def divergent_series_sum(f: RationalPolynomial) -> MethodValue:
    """
    Method value of ``sum_{u>=1} f(u)`` for a polynomial f, by linearity (A3, A4) over
    the divergent power sums.
    """
    total = MethodValue(Fraction(0))
    for k, c in f:
        total = total + divergent_power_sum(k).scale(c)
    return total


def divergent_alt_series_sum(f: RationalPolynomial) -> MethodValue:
    """
    Method value of ``sum_{u>=1} (-1)^(u-1) f(u)`` for a polynomial f, by linearity over
    the alternating divergent power sums.
    """
    total = MethodValue(Fraction(0))
    for k, c in f:
        total = total + divergent_alt_power_sum(k).scale(c)
    return total


def sum_to_infinity(rf: RegularFunction, a: int) -> MethodValue:
    """
    Method value of ``sum_{u>=a} f(u)``.

    Splits off the finite part between ``a`` and 1 (axiom A5) and sums the remaining
    series from 1 by :func:`divergent_series_sum`.
    """
    tail = divergent_series_sum(rf.f)
    if a > 1:
        return tail - finite_sum(rf, 1, a - 1)
    if a == 1:
        return tail
    return tail + finite_sum(rf, a, 0)


def _check_even(rf: RegularFunction) -> None:
    odd = [k for k, _ in rf.f if k % 2 == 1]
    if odd:
        raise ZetaKitError(ErrorCode.ODD_TERM_PRESENT, f"odd powers {odd}")


def theorem1_even(rf: RegularFunction) -> MethodValue:
    """
    Summation formula for even regular functions: ``sum_{u>=1} f(u) = -f(0)/2``.

    Raises:
        ZetaKitError: ``ODD_TERM_PRESENT`` if f has a nonzero odd-power coefficient.
    """
    _check_even(rf)
    return MethodValue(-rf.f(0) / 2)


def is_quasi_even(f: RationalPolynomial, shift: int) -> bool:
    """True iff ``f(-x) = f(x - shift)`` as a polynomial identity."""
    return f.reflect() == f.shift(-shift)


def theorem1_general(
    rf: RegularFunction,
    epsilon: int,
    t: int,
    limits: Sequence[RationalLike],
) -> MethodValue:
    """
    Summation formula for quasi-even regular functions with ``f(-x) = f(x - epsilon*t)``::

        sum_{u>=1} f(u) = epsilon/2 * sum_{u=d}^{t-1+d} (L_u - f(-epsilon*u)) - f(0)/2

    with ``d = (1 - epsilon)/2``. The limit values ``L_u = lim f(n - epsilon*u)`` are not
    defined classically for polynomials, so they are supplied by the caller in order
    ``u = d, ..., t-1+d``.

    Args:
        rf: The regular function.
        epsilon: +1 or -1.
        t: Positive shift length.
        limits: Exactly ``t`` limit values.

    Raises:
        ValueError: For epsilon not in {-1, +1} or t < 1.
        ZetaKitError: ``NOT_QUASI_EVEN`` if the symmetry fails, ``ARITY_MISMATCH`` if
            ``len(limits) != t``.
    """
    if epsilon not in (-1, 1):
        raise ValueError(f"epsilon must be -1 or +1, got {epsilon}")
    if t < 1:
        raise ValueError(f"t must be a positive integer, got {t}")
    if not is_quasi_even(rf.f, epsilon * t):
        raise ZetaKitError(ErrorCode.NOT_QUASI_EVEN, f"shift {epsilon * t}")
    if len(limits) != t:
        raise ZetaKitError(ErrorCode.ARITY_MISMATCH, f"expected {t} limits, got {len(limits)}")

    delta = (1 - epsilon) // 2
    acc = Fraction(0)
    for i, limit in enumerate(limits):
        u = delta + i
        acc += Fraction(limit) - rf.f(-epsilon * u)
    logger.debug("quasi-even sum with epsilon=%d, t=%d, boundary sum %s", epsilon, t, acc)
    return MethodValue(Fraction(epsilon, 2) * acc - rf.f(0) / 2)
