"""
Exact values of the zeta, eta, lambda and beta functions at integer arguments.

Values are :class:`PiValue` instances, i.e. finite sums ``sum q_m * pi^m`` with rational
``q_m``. Every closed form is available through at least two independent routes so that
the routes can be checked against each other exactly:

* eta(2k): Bernoulli closed form, and the recurrence obtained by evaluating the alternating
  sine series at ``x = pi``.
* zeta(2k), lambda(2k): from eta(2k) by the relations
  ``eta = (1 - 2^(1-s)) zeta`` and ``lambda = (1 - 2^-s) zeta``; lambda(2k) also from the
  alternating cosine series at ``x = pi``.
* beta(2k+1): Bernoulli sum and Euler number formula.
* beta(1-k): Bernoulli sum, Euler numbers, and the alternating divergent series
  ``sum (-1)^(u-1) (2u-1)^(k-1)`` summed by the method of :mod:`zetakit.regsum`.

Classes:
    - :class:`.PiValue`: Exact value ``sum q_m pi^m``.
    - :class:`.ClosedFormFunction`: Base class of the per-function evaluators.
"""

from __future__ import annotations

import logging
from abc import ABC, abstractmethod
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Iterator, Mapping, Optional, Type, Union

from zetakit.exactnum import (
    RationalLike,
    RationalPolynomial,
    bernoulli_even,
    bernoulli_plus,
    binomial,
    euler_number,
    factorial,
)
from zetakit.regsum import divergent_alt_power_sum, divergent_alt_series_sum, divergent_power_sum
from zetakit.shared_types import (
    FunctionId,
    Unsupported,
    UnsupportedReason,
    UnsupportedValueError,
)

# Global module logger
logger = logging.getLogger(__name__)


class PiValue:
    """
    Exact value ``sum_m q_m * pi^m`` with rational ``q_m`` and integer ``m >= 0``.

    Zero coefficients are never stored, so equality is plain map equality.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, RationalLike] | Iterable[tuple[int, RationalLike]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        collected: Dict[int, Fraction] = {}
        for power, coeff in items:
            if power < 0:
                raise ValueError(f"pi power must be non-negative, got {power}")
            collected[power] = collected.get(power, Fraction(0)) + Fraction(coeff)
        self._terms: Dict[int, Fraction] = {m: q for m, q in sorted(collected.items()) if q != 0}

    @classmethod
    def rational(cls, value: RationalLike) -> PiValue:
        """A value without pi dependence."""
        return cls({0: value})

    @classmethod
    def pi_power(cls, power: int, coeff: RationalLike = 1) -> PiValue:
        """The single term ``coeff * pi^power``."""
        return cls({power: coeff})

    @classmethod
    def zero(cls) -> PiValue:
        return cls()

    @property
    def terms(self) -> Dict[int, Fraction]:
        """Copy of the ``{power: coefficient}`` map."""
        return dict(self._terms)

    def __iter__(self) -> Iterator[tuple[int, Fraction]]:
        """``(power, coefficient)`` pairs in increasing power."""
        return iter(self._terms.items())

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_rational(self) -> bool:
        return all(m == 0 for m in self._terms)

    def as_rational(self) -> Fraction:
        """
        The value of a pi-free PiValue.

        Raises:
            ValueError: If the value depends on pi.
        """
        if not self.is_rational:
            raise ValueError(f"{self.to_text()} is not rational")
        return self._terms.get(0, Fraction(0))

    def single_term(self) -> tuple[int, Fraction]:
        """
        The ``(power, coefficient)`` of a single-term value. Zero is reported as ``(0, 0)``.

        Raises:
            ValueError: If the value has more than one term.
        """
        if not self._terms:
            return 0, Fraction(0)
        if len(self._terms) > 1:
            raise ValueError(f"{self.to_text()} has more than one term")
        return next(iter(self._terms.items()))

    def coefficient(self, power: int) -> Fraction:
        return self._terms.get(power, Fraction(0))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PiValue):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __add__(self, other: PiValue) -> PiValue:
        if not isinstance(other, PiValue):
            return NotImplemented
        return PiValue(list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> PiValue:
        return PiValue({m: -q for m, q in self._terms.items()})

    def __sub__(self, other: PiValue) -> PiValue:
        if not isinstance(other, PiValue):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Union[PiValue, RationalLike]) -> PiValue:
        if isinstance(other, PiValue):
            return PiValue(
                (m1 + m2, q1 * q2)
                for m1, q1 in self._terms.items()
                for m2, q2 in other._terms.items()
            )
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def scale(self, factor: RationalLike) -> PiValue:
        factor = Fraction(factor)
        return PiValue({m: q * factor for m, q in self._terms.items()})

    def to_text(self) -> str:
        """
        Exact text form: ``c`` for the pi-free term, ``(p/q)*pi^m`` otherwise, terms joined
        by `` + `` in increasing power. Integers print without ``/1``.

        Example:
            >>> PiValue.pi_power(2, Fraction(1, 12)).to_text()
            '(1/12)*pi^2'
        """
        if not self._terms:
            return "0"
        parts = []
        for m, q in self._terms.items():
            parts.append(str(q) if m == 0 else f"({q})*pi^{m}")
        return " + ".join(parts)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"PiValue({self.to_text()!r})"


def _check_positive(k: int) -> None:
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")


def _check_non_negative(k: int) -> None:
    if k < 0:
        raise ValueError(f"k must be a non-negative integer, got {k}")


def _eta_zero() -> PiValue:
    # eta(0) is the method value of 1 - 1 + 1 - ...
    return PiValue.rational(divergent_alt_power_sum(0).value)


def eta_even(k: int) -> PiValue:
    """
    ``eta(2k) = (-1)^(k-1) (2^(2k-1) - 1) B_2k pi^2k / (2k)!``.

    Example:
        >>> eta_even(2).to_text()
        '(7/720)*pi^4'
    """
    _check_positive(k)
    coeff = (-1) ** (k - 1) * (2 ** (2 * k - 1) - 1) * bernoulli_even(k) / factorial(2 * k)
    return PiValue.pi_power(2 * k, coeff)


@lru_cache(maxsize=None)
def _eta_recurrence_table(k: int) -> tuple[PiValue, ...]:
    # Evaluating the alternating sine series at x = pi gives
    # 0 = sum_{v=0}^{m} (-1)^v pi^2v / (2v+1)! * eta(2(m-v)).
    if k == 0:
        return (_eta_zero(),)
    table = list(_eta_recurrence_table(k - 1))
    acc = PiValue.zero()
    for v in range(1, k + 1):
        acc = acc + PiValue.pi_power(2 * v, Fraction((-1) ** v, factorial(2 * v + 1))) * table[k - v]
    table.append(-acc)
    return tuple(table)


def eta_even_recurrence(k: int) -> PiValue:
    """
    eta(2k) from the recurrence ``eta(2k) = -sum_{v=1}^{k} (-1)^v pi^2v/(2v+1)! eta(2(k-v))``,
    started at ``eta(0) = 1/2``. Independent of the Bernoulli numbers.
    """
    _check_positive(k)
    return _eta_recurrence_table(k)[k]


def zeta_even(k: int) -> PiValue:
    """``zeta(2k) = eta(2k) / (1 - 2^(1-2k))``."""
    _check_positive(k)
    return eta_even(k).scale(1 / (1 - Fraction(2) ** (1 - 2 * k)))


def zeta_even_euler(k: int) -> PiValue:
    """
    Euler's formula ``(-1)^k 2^(2k-1) B_2k pi^2k / (2k)!`` as commonly printed.

    With the modern sign convention (B_2 = +1/6) this is ``-zeta(2k)``: the printed form
    presumes a convention with positive B_2k. Kept so the convention can be checked.
    """
    _check_positive(k)
    coeff = (-1) ** k * 2 ** (2 * k - 1) * bernoulli_even(k) / factorial(2 * k)
    return PiValue.pi_power(2 * k, coeff)


def lambda_even(k: int) -> PiValue:
    """``lambda(2k) = (1 - 2^-2k) zeta(2k)``."""
    _check_positive(k)
    return zeta_even(k).scale(1 - Fraction(1, 2 ** (2 * k)))


def lambda_even_cosine(k: int) -> PiValue:
    """
    lambda(2k) from the alternating cosine series
    ``sum (-1)^(u-1) cos(ux)/u^2k = sum_{v=0}^{k} (-1)^v x^2v/(2v)! eta(2(k-v))`` at x = pi,
    where the left side becomes ``-zeta(2k)``. Solving gives
    ``lambda(2k) = -1/2 sum_{v=1}^{k} (-1)^v pi^2v/(2v)! eta(2(k-v))``.
    """
    _check_positive(k)
    acc = PiValue.zero()
    for v in range(1, k + 1):
        eta = _eta_zero() if v == k else eta_even(k - v)
        acc = acc + PiValue.pi_power(2 * v, Fraction((-1) ** v, factorial(2 * v))) * eta
    return acc.scale(Fraction(-1, 2))


def zeta_neg(k: int) -> PiValue:
    """
    ``zeta(-k) = -B+_{k+1} / (k+1)`` (B_1 = +1/2). Extended to k = 0, giving -1/2.

    Example:
        >>> zeta_neg(1).to_text()
        '-1/12'
    """
    _check_non_negative(k)
    return PiValue.rational(-bernoulli_plus(k + 1) / (k + 1))


def eta_neg(k: int) -> PiValue:
    """``eta(-k) = (1 - 2^(1+k)) zeta(-k)``."""
    _check_non_negative(k)
    return zeta_neg(k).scale(1 - 2 ** (1 + k))


def lambda_neg(k: int) -> PiValue:
    """``lambda(-k) = (1 - 2^k) zeta(-k)``; zero at k = 0."""
    _check_non_negative(k)
    return zeta_neg(k).scale(1 - 2 ** k)


def beta_neg_bernoulli(k: int) -> PiValue:
    """
    ``beta(1-k) = -1/(2k) sum_{u=1}^{k} (-1)^u 2^u (2^u - 1) C(k,u) B+_u`` (B_1 = +1/2).
    """
    _check_positive(k)
    acc = sum(
        ((-1) ** u * 2 ** u * (2 ** u - 1) * binomial(k, u) * bernoulli_plus(u) for u in range(1, k + 1)),
        Fraction(0),
    )
    return PiValue.rational(-acc / (2 * k))


def beta_neg_euler(k: int) -> PiValue:
    """``beta(-k) = E_k / 2``."""
    _check_non_negative(k)
    return PiValue.rational(Fraction(euler_number(k), 2))


def beta_neg_alternating(k: int) -> PiValue:
    """
    beta(1-k) as the method value of ``sum_{u>=1} (-1)^(u-1) (2u-1)^(k-1)``.
    """
    _check_positive(k)
    odd = RationalPolynomial([-1, 2]) ** (k - 1)
    return PiValue.rational(divergent_alt_series_sum(odd).value)


def beta_odd_bernoulli(k: int) -> PiValue:
    """
    ``beta(2k+1) = (-1)^(k+1) pi^(2k+1) / (2^(2k+1) (2k+1)!) *
    sum_{u=0}^{k} 2^2u (2^(2u-1) - 1) C(2k+1, 2u) B_2u``.

    Example:
        >>> beta_odd_bernoulli(1).to_text()
        '(1/32)*pi^3'
    """
    _check_non_negative(k)
    acc = sum(
        (
            2 ** (2 * u) * (Fraction(2) ** (2 * u - 1) - 1) * binomial(2 * k + 1, 2 * u) * bernoulli_even(u)
            for u in range(k + 1)
        ),
        Fraction(0),
    )
    coeff = (-1) ** (k + 1) * acc / (2 ** (2 * k + 1) * factorial(2 * k + 1))
    return PiValue.pi_power(2 * k + 1, coeff)


def beta_odd_euler(k: int) -> PiValue:
    """``beta(2k+1) = (-1)^k E_2k pi^(2k+1) / (2^(2k+2) (2k)!)``."""
    _check_non_negative(k)
    coeff = Fraction((-1) ** k * euler_number(2 * k), 2 ** (2 * k + 2) * factorial(2 * k))
    return PiValue.pi_power(2 * k + 1, coeff)


def beta_functional_check(k: int) -> bool:
    """
    Checks ``beta(1-s) = (2/pi)^s sin(pi s/2) Gamma(s) beta(s)`` at ``s = 2k+1``.

    There ``sin(pi s/2) = (-1)^k`` and ``Gamma(s) = (2k)!``, and the powers of pi cancel,
    leaving the rational identity ``E_2k/2 = 2^(2k+1) (-1)^k (2k)! q`` where
    ``beta(2k+1) = q pi^(2k+1)``.
    """
    _check_positive(k)
    lhs = beta_neg_euler(2 * k).as_rational()
    power, q = beta_odd_euler(k).single_term()
    if power != 2 * k + 1:
        return False
    rhs = 2 ** (2 * k + 1) * (-1) ** k * factorial(2 * k) * q
    return lhs == rhs


FUNCTION_REGISTRY: Dict[FunctionId, Type["ClosedFormFunction"]] = {}


class ClosedFormFunction(ABC):
    """
    Base class of the exact evaluators, one subclass per :class:`FunctionId`.

    Subclasses declaring ``FUNCTION_ID`` register themselves in :data:`FUNCTION_REGISTRY`.
    """
    FUNCTION_ID: Optional[FunctionId] = None

    def __init_subclass__(cls, **kwargs):
        super().__init_subclass__(**kwargs)
        if cls.FUNCTION_ID:
            FUNCTION_REGISTRY[cls.FUNCTION_ID] = cls

    def evaluate(self, s: int) -> PiValue | Unsupported:
        """Exact value at the integer ``s`` or a structured :class:`Unsupported`."""
        if s <= 0:
            return self.at_non_positive(-s)
        return self.at_positive(s)

    @abstractmethod
    def at_non_positive(self, k: int) -> PiValue:
        """Value at ``s = -k``."""

    @abstractmethod
    def at_positive(self, s: int) -> PiValue | Unsupported:
        """Value at ``s >= 1``."""

    def _unsupported(self, s: int, reason: UnsupportedReason, detail: str) -> Unsupported:
        logger.debug("%s(%d) unsupported: %s", self.FUNCTION_ID, s, detail)
        return Unsupported(self.FUNCTION_ID, s, reason, detail)


class ZetaFunction(ClosedFormFunction):
    """Riemann zeta: even positive and all non-positive arguments."""
    FUNCTION_ID = FunctionId.ZETA

    def at_non_positive(self, k: int) -> PiValue:
        if k == 0:
            return PiValue.rational(divergent_power_sum(0).value)
        return zeta_neg(k)

    def at_positive(self, s: int) -> PiValue | Unsupported:
        if s == 1:
            return self._unsupported(s, UnsupportedReason.POLE, "simple pole at s=1 with residue 1")
        if s % 2 == 1:
            return self._unsupported(s, UnsupportedReason.NO_CLOSED_FORM, "no closed form at odd s >= 3")
        return zeta_even(s // 2)


class EtaFunction(ClosedFormFunction):
    """Dirichlet eta: even positive and all non-positive arguments."""
    FUNCTION_ID = FunctionId.ETA

    def at_non_positive(self, k: int) -> PiValue:
        return eta_neg(k)

    def at_positive(self, s: int) -> PiValue | Unsupported:
        if s == 1:
            return self._unsupported(s, UnsupportedReason.NO_CLOSED_FORM, "eta(1) = ln 2 is not a rational multiple of a power of pi")
        if s % 2 == 1:
            return self._unsupported(s, UnsupportedReason.NO_CLOSED_FORM, "no closed form at odd s >= 3")
        return eta_even(s // 2)


class LambdaFunction(ClosedFormFunction):
    """Dirichlet lambda: even positive and all non-positive arguments."""
    FUNCTION_ID = FunctionId.LAMBDA

    def at_non_positive(self, k: int) -> PiValue:
        return lambda_neg(k)

    def at_positive(self, s: int) -> PiValue | Unsupported:
        if s == 1:
            return self._unsupported(s, UnsupportedReason.POLE, "lambda = (1 - 2^-s) zeta has a pole at s=1")
        if s % 2 == 1:
            return self._unsupported(s, UnsupportedReason.NO_CLOSED_FORM, "no closed form at odd s >= 3")
        return lambda_even(s // 2)


class BetaFunction(ClosedFormFunction):
    """Dirichlet beta: odd positive and all non-positive arguments."""
    FUNCTION_ID = FunctionId.BETA

    def at_non_positive(self, k: int) -> PiValue:
        return beta_neg_euler(k)

    def at_positive(self, s: int) -> PiValue | Unsupported:
        if s % 2 == 0:
            detail = "beta(2) is Catalan's constant G" if s == 2 else "no closed form at even s"
            return self._unsupported(s, UnsupportedReason.NO_CLOSED_FORM, detail)
        return beta_odd_euler((s - 1) // 2)


def function_from_id(fn: FunctionId | str) -> ClosedFormFunction:
    """
    Creates the evaluator registered for a function id.

    Raises:
        ValueError: If ``fn`` names no known function.
    """
    try:
        fn_id = FunctionId(fn)
    except ValueError:
        raise ValueError(f"Unsupported function: {fn}") from None
    return FUNCTION_REGISTRY[fn_id]()


def evaluate(fn: FunctionId | str, s: int) -> PiValue | Unsupported:
    """
    Exact value of ``fn(s)``.

    zeta, eta and lambda are available at even positive s and all s <= 0; beta at odd
    positive s and all s <= 0. Other arguments return :class:`Unsupported` with reason
    ``POLE`` (zeta(1), lambda(1)) or ``NO_CLOSED_FORM``.

    Example:
        >>> evaluate("zeta", -1).to_text()
        '-1/12'
    """
    return function_from_id(fn).evaluate(s)


def evaluate_or_raise(fn: FunctionId | str, s: int) -> PiValue:
    """
    Like :func:`evaluate` but raises for unsupported arguments.

    Raises:
        UnsupportedValueError: If no exact value exists.
    """
    result = evaluate(fn, s)
    if isinstance(result, Unsupported):
        raise UnsupportedValueError(result)
    return result
