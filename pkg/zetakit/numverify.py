"""
Floating point verification of the exact closed forms.

The convergent Dirichlet series are summed directly (numpy vectorised, with an
Euler-Maclaurin tail estimate) or, for alternating series, with iterated averaging of the
partial sums. The trigonometric series identities behind the closed forms are checked at
sampled points. Every check produces a :class:`VerificationReport`.

Suites of reports are evaluated concurrently in worker threads and returned sorted by name.
"""

from __future__ import annotations

import asyncio
import logging
import math
from dataclasses import dataclass, field, replace
from enum import Enum
from fractions import Fraction
from typing import Callable, List, NamedTuple

import numpy as np

from zetakit.exactnum import bernoulli_even, binomial, factorial
from zetakit.shared_types import ErrorCode, FunctionId, Unsupported, ZetaKitError
from zetakit import values
from zetakit.values import PiValue

# Global module logger
logger = logging.getLogger(__name__)

PI_DECIMALS = (
    "1415926535897932384626433832795028841971"
    "6939937510582097494459230781640628620899"
    "86280348253421170679"
)
"""The first 100 decimals of pi."""


@dataclass(frozen=True)
class NumericConfig:
    """
    Knobs of the floating point verification.

    Attributes:
        tolerance (float): Maximum accepted absolute deviation.
        max_terms (int): Upper bound on summed series terms.
        acceleration_depth (int): Number of averaging passes over the partial sums of an
            alternating series.
        pi_digits (int): Decimals of pi used when converting exact values to float.
    """
    tolerance: float = 1e-9
    max_terms: int = 100_000
    acceleration_depth: int = 12
    pi_digits: int = 30

    def __post_init__(self):
        if not self.tolerance > 0:
            raise ZetaKitError(ErrorCode.INVALID_CONFIG, f"tolerance must be > 0, got {self.tolerance}")
        if self.max_terms < 1:
            raise ZetaKitError(ErrorCode.INVALID_CONFIG, f"max_terms must be >= 1, got {self.max_terms}")
        if self.acceleration_depth < 0:
            raise ZetaKitError(ErrorCode.INVALID_CONFIG, f"acceleration_depth must be >= 0, got {self.acceleration_depth}")
        if not 1 <= self.pi_digits <= len(PI_DECIMALS):
            raise ZetaKitError(ErrorCode.INVALID_CONFIG, f"pi_digits must be in 1..100, got {self.pi_digits}")

    def with_overrides(self, **overrides) -> NumericConfig:
        """Returns a copy with the given fields replaced; ``None`` values are ignored."""
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})


@dataclass(frozen=True)
class VerificationReport:
    """
    Outcome of comparing a summed series (``lhs``) with a closed form (``rhs``).

    ``passed`` is derived: ``deviation <= tolerance``.
    """
    name: str
    lhs: float
    rhs: float
    deviation: float
    tolerance: float
    terms_used: int
    error_bound: float = 0.0
    passed: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "passed", self.deviation <= self.tolerance)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "deviation": self.deviation,
            "tolerance": self.tolerance,
            "passed": self.passed,
            "terms_used": self.terms_used,
            "error_bound": self.error_bound,
        }


class SeriesEstimate(NamedTuple):
    """
    Result of :func:`sum_alternating`.

    Attributes:
        value: Accelerated estimate of the sum.
        raw_partial_sum: Plain partial sum of the first ``terms_used`` terms.
        remainder_bound: Magnitude of the first omitted term, which bounds the distance of
            the raw partial sum from the limit.
        terms_used: Number of terms evaluated.
    """
    value: float
    raw_partial_sum: float
    remainder_bound: float
    terms_used: int


class TrigSeriesVariant(str, Enum):
    """
    Trigonometric series identities that can be verified by :func:`verify_sine_identity`.
    """
    ALTERNATING_SINE = "alternating-sine"
    "sum (-1)^(u-1) sin(ux)/u^(2k+1) expanded over eta(2j), -pi <= x <= pi."

    ALTERNATING_SINE_BERNOULLI = "alternating-sine-bernoulli"
    "The same series in Bernoulli number form, -pi <= x <= pi."

    SINE = "sine"
    "sum sin(ux)/u^(2k+1) in Bernoulli number form, 0 <= x <= 2 pi, k >= 1."

    ALTERNATING_COSINE = "alternating-cosine"
    "sum (-1)^(u-1) cos(ux)/u^(2k) expanded over eta(2j), -pi <= x <= pi, k >= 2."

    @property
    def interval(self) -> tuple[float, float]:
        """Closed validity interval of x."""
        if self is TrigSeriesVariant.SINE:
            return 0.0, 2 * math.pi
        return -math.pi, math.pi

    @property
    def min_k(self) -> int:
        """Smallest accepted k. Below it the direct sum converges too slowly somewhere in the interval."""
        if self is TrigSeriesVariant.SINE:
            return 1
        if self is TrigSeriesVariant.ALTERNATING_COSINE:
            return 2
        return 0


class SuiteName(str, Enum):
    """Fixed verification batteries run by :func:`run_suite`."""
    VALUES = "values"
    IDENTITIES = "identities"
    FUNCTIONAL_EQUATION = "functional-equation"
    CROSS_ROUTES = "cross-routes"
    ALL = "all"


MAX_SINE_K = 6
SIGN_CHECK_TERMS = 100
_INITIAL_TERMS = 64
_OSCILLATION_PASSES = 2
_MIN_FILTER_GAIN = 1e-3


def pi_to_rational(digits: int) -> Fraction:
    """
    Pi truncated to ``digits`` decimals, as an exact rational.

    Raises:
        ZetaKitError: ``DIGITS_OUT_OF_RANGE`` unless ``1 <= digits <= 100``.

    Example:
        >>> pi_to_rational(2)
        Fraction(157, 50)
    """
    if not 1 <= digits <= len(PI_DECIMALS):
        raise ZetaKitError(ErrorCode.DIGITS_OUT_OF_RANGE, str(digits))
    return Fraction(int("3" + PI_DECIMALS[:digits]), 10 ** digits)


def to_float(v: PiValue, digits: int = 30) -> float:
    """
    Converts an exact value to float, using pi truncated to ``digits`` decimals.

    The sum is formed exactly in rationals and rounded once. Values beyond the float
    range round to ``inf`` or ``-inf``.
    """
    pi = pi_to_rational(digits)
    exact = sum((q * pi ** m for m, q in v), Fraction(0))
    try:
        return float(exact)
    except OverflowError:
        return math.inf if exact > 0 else -math.inf


def _iterated_average(partials: np.ndarray, depth: int) -> float:
    """Averages neighbouring partial sums ``depth`` times and returns the last entry."""
    depth = min(depth, len(partials) - 1)
    current = partials[-(depth + 1):]
    for _ in range(depth):
        current = 0.5 * (current[1:] + current[:-1])
    return float(current[-1])


def _oscillation_average(partials: np.ndarray, theta: float, passes: int) -> float:
    """
    Weighted average of neighbouring partial sums that cancels a tail oscillating with
    frequency ``theta``::

        S'_n = (S_n - 2 cos(theta) S_{n-1} + S_{n-2}) / (2 - 2 cos(theta))

    At ``theta = pi`` one pass equals two passes of :func:`_iterated_average`. Returns the
    plain last partial sum when the weights degenerate (``theta`` near a multiple of 2 pi).
    """
    gain = 2.0 - 2.0 * math.cos(theta)
    if gain < _MIN_FILTER_GAIN or len(partials) <= 2 * passes:
        return float(partials[-1])
    c = -2.0 * math.cos(theta)
    current = partials[-(2 * passes + 1):]
    for _ in range(passes):
        current = (current[2:] + c * current[1:-1] + current[:-2]) / gain
    return float(current[-1])


def _check_alternating(term: Callable[[int], float]) -> bool:
    """
    Samples the first terms and checks that consecutive nonzero terms change sign.
    Returns False if every sampled term is zero.
    """
    previous = 0.0
    seen_nonzero = False
    for u in range(1, SIGN_CHECK_TERMS + 1):
        t = term(u)
        if t == 0:
            continue
        if seen_nonzero and (t > 0) == (previous > 0):
            raise ZetaKitError(ErrorCode.NON_ALTERNATING, f"terms {u - 1} and {u} have equal sign")
        previous = t
        seen_nonzero = True
    return seen_nonzero


def sum_alternating(term: Callable[[int], float], cfg: NumericConfig = NumericConfig()) -> SeriesEstimate:
    """
    Sums an alternating series ``sum_{u>=1} term(u)`` with iterated averaging of partial
    sums (an Euler transform variant).

    The number of terms is doubled from 64 until two successive estimates agree to a
    thousandth of the tolerance or ``cfg.max_terms`` is reached.

    Raises:
        ZetaKitError: ``NON_ALTERNATING`` if the sampled signs do not alternate.

    Example:
        >>> est = sum_alternating(lambda u: (-1) ** (u - 1) / u ** 2)
        >>> abs(est.value - math.pi ** 2 / 12) < 1e-10
        True
    """
    if not _check_alternating(term):
        return SeriesEstimate(0.0, 0.0, 0.0, SIGN_CHECK_TERMS)

    n = min(_INITIAL_TERMS, cfg.max_terms)
    terms = np.fromiter((term(u) for u in range(1, n + 1)), dtype=float, count=n)
    estimate = _iterated_average(np.cumsum(terms), cfg.acceleration_depth)
    while n < cfg.max_terms:
        m = min(2 * n, cfg.max_terms)
        extra = np.fromiter((term(u) for u in range(n + 1, m + 1)), dtype=float, count=m - n)
        terms = np.concatenate((terms, extra))
        n = m
        refined = _iterated_average(np.cumsum(terms), cfg.acceleration_depth)
        converged = abs(refined - estimate) <= cfg.tolerance * 1e-3
        estimate = refined
        if converged:
            break

    partial = float(np.sum(terms))
    bound = abs(term(n + 1))
    logger.debug("alternating sum: %d terms, estimate %.17g, remainder bound %.3g", n, estimate, bound)
    return SeriesEstimate(estimate, partial, bound, n)


def sum_direct(scale: int, offset: int, s: int, cfg: NumericConfig = NumericConfig()) -> SeriesEstimate:
    """
    Sums ``sum_{u>=1} (scale*u + offset)^-s`` for s >= 2 directly over ``cfg.max_terms``
    terms and adds the Euler-Maclaurin estimate of the tail::

        v^(1-s) / (scale (s-1)) - v^-s / 2 + scale s v^(-s-1) / 12,   v = scale*N + offset

    ``remainder_bound`` is the size of the next neglected correction.
    """
    if s < 2:
        raise ZetaKitError(ErrorCode.DOMAIN_VIOLATION, f"direct summation needs s >= 2, got {s}")
    n = cfg.max_terms
    u = np.arange(1, n + 1, dtype=float)
    terms = (scale * u + offset) ** (-float(s))
    partial = float(np.sum(terms[::-1]))
    v = float(scale * n + offset)
    tail = v ** (1 - s) / (scale * (s - 1)) - v ** (-s) / 2 + scale * s * v ** (-s - 1) / 12
    bound = scale ** 3 * s * (s + 1) * (s + 2) * v ** (-s - 3) / 720
    return SeriesEstimate(partial + tail, partial, bound, n)


def _closed_form(fn: FunctionId, s: int) -> PiValue:
    result = values.evaluate(fn, s)
    if isinstance(result, Unsupported):
        raise ZetaKitError(ErrorCode.UNSUPPORTED, str(result))
    return result


def verify_value(fn: FunctionId | str, s: int, cfg: NumericConfig = NumericConfig()) -> VerificationReport:
    """
    Compares the Dirichlet series of ``fn`` at ``s`` with the exact closed form.

    * eta: ``sum (-1)^(u-1) u^-s``, alternating acceleration.
    * beta: ``sum (-1)^(u-1) (2u-1)^-s``, alternating acceleration.
    * zeta: ``sum u^-s``, direct with tail estimate.
    * lambda: ``sum (2u-1)^-s``, direct with tail estimate.

    Raises:
        ZetaKitError: ``UNSUPPORTED`` if the closed form does not exist,
            ``DOMAIN_VIOLATION`` if the series does not converge (s <= 0).
    """
    fn = FunctionId(fn)
    exact = _closed_form(fn, s)
    if s < 1:
        raise ZetaKitError(ErrorCode.DOMAIN_VIOLATION, f"{fn.symbol}({s}): series diverges")

    if fn is FunctionId.ETA:
        est = sum_alternating(lambda u: (-1) ** (u - 1) / float(u) ** s, cfg)
    elif fn is FunctionId.BETA:
        est = sum_alternating(lambda u: (-1) ** (u - 1) / float(2 * u - 1) ** s, cfg)
    elif fn is FunctionId.ZETA:
        est = sum_direct(1, 0, s, cfg)
    else:
        est = sum_direct(2, -1, s, cfg)

    rhs = to_float(exact, cfg.pi_digits)
    deviation = abs(est.value - rhs)
    report = VerificationReport(
        name=f"value {fn.value}({s})",
        lhs=est.value,
        rhs=rhs,
        deviation=deviation,
        tolerance=cfg.tolerance,
        terms_used=est.terms_used,
        error_bound=est.remainder_bound,
    )
    logger.debug("%s: deviation %.3g", report.name, deviation)
    return report


def _eta_float(j: int, pi_digits: int) -> float:
    # eta(0) = 1/2 closes the finite expansions
    if j == 0:
        return 0.5
    return to_float(values.eta_even(j), pi_digits)


def _bernoulli_form(k: int, y: float, pi: float) -> float:
    acc = 0.0
    for u in range(k + 1):
        coeff = (Fraction(2) ** (2 * u - 1) - 1) * binomial(2 * k + 1, 2 * u) * bernoulli_even(u)
        acc += float(coeff) * y ** (2 * (k - u) + 1) * pi ** (2 * u)
    return (-1) ** (k + 1) * acc / factorial(2 * k + 1)


def _finite_side(k: int, x: float, variant: TrigSeriesVariant, pi_digits: int) -> float:
    pi = float(pi_to_rational(pi_digits))
    if variant is TrigSeriesVariant.ALTERNATING_SINE:
        return sum(
            (-1) ** v * x ** (2 * v + 1) / factorial(2 * v + 1) * _eta_float(k - v, pi_digits)
            for v in range(k + 1)
        )
    if variant is TrigSeriesVariant.ALTERNATING_COSINE:
        return sum(
            (-1) ** v * x ** (2 * v) / factorial(2 * v) * _eta_float(k - v, pi_digits)
            for v in range(k + 1)
        )
    if variant is TrigSeriesVariant.ALTERNATING_SINE_BERNOULLI:
        return _bernoulli_form(k, x, pi)
    return _bernoulli_form(k, pi - x, pi)


def _series_side(k: int, x: float, variant: TrigSeriesVariant, n: int) -> tuple[float, float]:
    """
    Sums the series side over n terms. The partial sums are averaged with weights that
    cancel the oscillation of the tail: frequency ``x`` for the plain sine series and
    ``pi - x`` for the alternating ones.
    """
    u = np.arange(1, n + 1, dtype=float)
    signs = np.where(u % 2 == 1, 1.0, -1.0)
    if variant is TrigSeriesVariant.SINE:
        terms = np.sin(u * x) / u ** (2 * k + 1)
        exponent = 2 * k + 1
    elif variant is TrigSeriesVariant.ALTERNATING_COSINE:
        terms = signs * np.cos(u * x) / u ** (2 * k)
        exponent = 2 * k
    else:
        terms = signs * np.sin(u * x) / u ** (2 * k + 1)
        exponent = 2 * k + 1
    theta = x if variant is TrigSeriesVariant.SINE else math.pi - x
    value = _oscillation_average(np.cumsum(terms), theta, _OSCILLATION_PASSES)
    # bound of the raw tail: integral of u^-exponent beyond n, or the next term envelope
    bound = float(n) ** (1 - exponent) / (exponent - 1) if exponent > 1 else 1.0 / (n + 1)
    return value, bound


def verify_sine_identity(
    k: int,
    x: float,
    variant: TrigSeriesVariant | str,
    cfg: NumericConfig = NumericConfig(),
) -> VerificationReport:
    """
    Verifies a trigonometric series identity at ``(k, x)``: the series is summed over
    ``cfg.max_terms`` terms with oscillation-cancelling averaging of the partial sums, the
    finite side is evaluated from the exact Bernoulli and eta coefficients.

    Raises:
        ZetaKitError: ``DOMAIN_VIOLATION`` if x is outside the variant's interval, k is
            below the variant's :attr:`~TrigSeriesVariant.min_k` or above 6, or k = 0 at
            x = -pi or pi, where the alternating sine series jumps.
    """
    variant = TrigSeriesVariant(variant)
    lo, hi = variant.interval
    if not lo <= x <= hi:
        raise ZetaKitError(ErrorCode.DOMAIN_VIOLATION, f"x={x} outside [{lo}, {hi}] for {variant.value}")
    if not 0 <= k <= MAX_SINE_K:
        raise ZetaKitError(ErrorCode.DOMAIN_VIOLATION, f"k={k} outside 0..{MAX_SINE_K}")
    if k < variant.min_k:
        raise ZetaKitError(ErrorCode.DOMAIN_VIOLATION, f"{variant.value} needs k >= {variant.min_k}")
    if k == 0 and abs(x) == math.pi:
        raise ZetaKitError(ErrorCode.DOMAIN_VIOLATION, f"{variant.value} with k=0 holds only for -pi < x < pi")

    lhs, bound = _series_side(k, x, variant, cfg.max_terms)
    rhs = _finite_side(k, x, variant, cfg.pi_digits)
    return VerificationReport(
        name=f"identity {variant.value} k={k} x={x:.10f}",
        lhs=lhs,
        rhs=rhs,
        deviation=abs(lhs - rhs),
        tolerance=cfg.tolerance,
        terms_used=cfg.max_terms,
        error_bound=bound,
    )


def _exact_report(name: str, lhs: PiValue, rhs: PiValue, cfg: NumericConfig) -> VerificationReport:
    lhs_f = to_float(lhs, cfg.pi_digits)
    rhs_f = to_float(rhs, cfg.pi_digits)
    return VerificationReport(
        name=name,
        lhs=lhs_f,
        rhs=rhs_f,
        deviation=0.0 if lhs == rhs else math.inf,
        tolerance=cfg.tolerance,
        terms_used=0,
    )


def _functional_equation_report(k: int, cfg: NumericConfig) -> VerificationReport:
    power, q = values.beta_odd_euler(k).single_term()
    rhs = PiValue.rational(2 ** (2 * k + 1) * (-1) ** k * factorial(2 * k) * q)
    return _exact_report(f"functional-equation beta(-{2 * k}) k={k:02d}", values.beta_neg_euler(2 * k), rhs, cfg)


def _identity_grid(variant: TrigSeriesVariant, points: int = 20) -> List[float]:
    lo, hi = variant.interval
    if variant is TrigSeriesVariant.SINE:
        grid = [lo + (hi - lo) * j / (points + 1) for j in range(1, points + 1)]
        grid.append(math.pi / 2)
        return grid
    return [lo + (hi - lo) * j / (points - 1) for j in range(points)]


def _suite_jobs(name: SuiteName, cfg: NumericConfig) -> List[Callable[[], VerificationReport]]:
    jobs: List[Callable[[], VerificationReport]] = []
    if name in (SuiteName.VALUES, SuiteName.ALL):
        for k in range(1, 6):
            for fn in (FunctionId.ETA, FunctionId.ZETA, FunctionId.LAMBDA):
                jobs.append(lambda fn=fn, k=k: verify_value(fn, 2 * k, cfg))
        for k in range(0, 5):
            jobs.append(lambda k=k: verify_value(FunctionId.BETA, 2 * k + 1, cfg))
    if name in (SuiteName.IDENTITIES, SuiteName.ALL):
        for variant in TrigSeriesVariant:
            for k in range(max(variant.min_k, 1), max(variant.min_k, 1) + 3):
                for x in _identity_grid(variant):
                    jobs.append(lambda k=k, x=x, variant=variant: verify_sine_identity(k, x, variant, cfg))
    if name in (SuiteName.FUNCTIONAL_EQUATION, SuiteName.ALL):
        for k in range(1, 41):
            jobs.append(lambda k=k: _functional_equation_report(k, cfg))
    if name in (SuiteName.CROSS_ROUTES, SuiteName.ALL):
        for k in range(1, 41):
            jobs.append(lambda k=k: _exact_report(
                f"cross-route eta({2 * k}) recurrence k={k:02d}", values.eta_even(k), values.eta_even_recurrence(k), cfg))
            jobs.append(lambda k=k: _exact_report(
                f"cross-route lambda({2 * k}) cosine k={k:02d}", values.lambda_even(k), values.lambda_even_cosine(k), cfg))
            jobs.append(lambda k=k: _exact_report(
                f"cross-route beta({1 - k}) bernoulli k={k:02d}", values.beta_neg_euler(k - 1), values.beta_neg_bernoulli(k), cfg))
            jobs.append(lambda k=k: _exact_report(
                f"cross-route beta({1 - k}) alternating k={k:02d}", values.beta_neg_euler(k - 1), values.beta_neg_alternating(k), cfg))
        for k in range(0, 41):
            jobs.append(lambda k=k: _exact_report(
                f"cross-route beta({2 * k + 1}) bernoulli k={k:02d}", values.beta_odd_euler(k), values.beta_odd_bernoulli(k), cfg))
    return jobs


async def run_suite_async(name: SuiteName | str, cfg: NumericConfig = NumericConfig()) -> List[VerificationReport]:
    """
    Runs a verification suite, evaluating the reports concurrently in worker threads.

    Returns:
        List[VerificationReport]: Reports sorted by name.

    Raises:
        ZetaKitError: ``UNKNOWN_SUITE`` for an unknown suite name.
    """
    try:
        suite = SuiteName(name)
    except ValueError:
        raise ZetaKitError(ErrorCode.UNKNOWN_SUITE, str(name)) from None

    jobs = _suite_jobs(suite, cfg)
    logger.debug("Running suite %s with %d reports...", suite.value, len(jobs))
    reports = await asyncio.gather(*(asyncio.to_thread(job) for job in jobs))
    reports = sorted(reports, key=lambda r: r.name)
    failed = sum(1 for r in reports if not r.passed)
    logger.info("Suite %s: %d reports, %d failed", suite.value, len(reports), failed)
    return reports


def run_suite(name: SuiteName | str, cfg: NumericConfig = NumericConfig()) -> List[VerificationReport]:
    """
    Synchronous wrapper of :func:`run_suite_async`.

    Example:
        >>> reports = run_suite("values")
        >>> all(r.passed for r in reports)
        True
    """
    return asyncio.run(run_suite_async(name, cfg))
