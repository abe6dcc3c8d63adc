"""
Exact rational arithmetic substrate: binomials, Bernoulli and Euler numbers, Bernoulli
polynomials and a dense rational polynomial type.

All values are immutable. The Bernoulli and Euler tables are grow-only caches that are
extended by their defining recurrences under a lock, so they can be shared between
threads.

Classes:
    - :class:`.RationalPolynomial`: Dense polynomial with :class:`fractions.Fraction` coefficients.
    - :class:`.BernoulliTable`: Cache of the Bernoulli numbers B_n^- (B_1 = -1/2).
    - :class:`.EulerTable`: Cache of the Euler numbers E_n.
"""

from __future__ import annotations

import logging
import math
import threading
from abc import ABC, abstractmethod
from fractions import Fraction
from functools import lru_cache
from typing import Generic, Iterable, Iterator, List, TypeVar, Union

# Global module logger
logger = logging.getLogger(__name__)

Rational = Fraction
"""The universal exact scalar. Always in canonical form (positive denominator, reduced)."""

RationalLike = Union[Fraction, int]

T = TypeVar("T")


def binomial(n: int, k: int) -> int:
    """
    Binomial coefficient C(n, k) for non-negative n and k.

    Returns 0 when k > n.

    Example:
        >>> binomial(5, 2)
        10
    """
    return math.comb(n, k)


def factorial(n: int) -> int:
    """Returns n! for a non-negative integer n."""
    return math.factorial(n)


class RationalPolynomial:
    """
    Dense polynomial in one variable with exact rational coefficients.

    Coefficients are stored lowest power first without trailing zeros, so the zero
    polynomial has an empty coefficient tuple. The degree of the zero polynomial is
    undefined and querying it raises :class:`ValueError`.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable[RationalLike] = ()):
        coeffs = [Fraction(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self._coeffs: tuple[Fraction, ...] = tuple(coeffs)

    @classmethod
    def zero(cls) -> RationalPolynomial:
        return cls(())

    @classmethod
    def constant(cls, value: RationalLike) -> RationalPolynomial:
        return cls((value,))

    @classmethod
    def monomial(cls, power: int, coefficient: RationalLike = 1) -> RationalPolynomial:
        """Returns ``coefficient * x**power``."""
        if power < 0:
            raise ValueError("power must be non-negative")
        return cls([0] * power + [coefficient])

    @classmethod
    def x(cls) -> RationalPolynomial:
        """The identity polynomial ``x``."""
        return cls.monomial(1)

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        """Coefficients indexed by power, highest entry nonzero."""
        return self._coeffs

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def degree(self) -> int:
        """
        Degree of a nonzero polynomial.

        Raises:
            ValueError: For the zero polynomial.
        """
        if not self._coeffs:
            raise ValueError("degree of the zero polynomial is undefined")
        return len(self._coeffs) - 1

    def coefficient(self, power: int) -> Fraction:
        """Coefficient of ``x**power`` (zero beyond the degree)."""
        if 0 <= power < len(self._coeffs):
            return self._coeffs[power]
        return Fraction(0)

    @property
    def is_even(self) -> bool:
        """True if all odd-power coefficients vanish, i.e. f(-x) = f(x)."""
        return all(c == 0 for c in self._coeffs[1::2])

    def __call__(self, x: RationalLike) -> Fraction:
        # Horner
        result = Fraction(0)
        for c in reversed(self._coeffs):
            result = result * x + c
        return result

    def __iter__(self) -> Iterator[tuple[int, Fraction]]:
        """Iterates over ``(power, coefficient)`` pairs with nonzero coefficient."""
        return ((p, c) for p, c in enumerate(self._coeffs) if c != 0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RationalPolynomial):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __add__(self, other: RationalPolynomial | RationalLike) -> RationalPolynomial:
        other = _as_polynomial(other)
        n = max(len(self._coeffs), len(other._coeffs))
        return RationalPolynomial(self.coefficient(i) + other.coefficient(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> RationalPolynomial:
        return RationalPolynomial(-c for c in self._coeffs)

    def __sub__(self, other: RationalPolynomial | RationalLike) -> RationalPolynomial:
        return self + (-_as_polynomial(other))

    def __rsub__(self, other: RationalLike) -> RationalPolynomial:
        return _as_polynomial(other) - self

    def __mul__(self, other: RationalPolynomial | RationalLike) -> RationalPolynomial:
        if not isinstance(other, RationalPolynomial):
            return self.scale(other)
        if self.is_zero or other.is_zero:
            return RationalPolynomial.zero()
        product = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other._coeffs):
                product[i + j] += a * b
        return RationalPolynomial(product)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> RationalPolynomial:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = RationalPolynomial.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def scale(self, factor: RationalLike) -> RationalPolynomial:
        """Multiplies every coefficient by ``factor``."""
        factor = Fraction(factor)
        return RationalPolynomial(c * factor for c in self._coeffs)

    def shift(self, c: RationalLike) -> RationalPolynomial:
        """Returns the polynomial ``x -> f(x + c)``."""
        result = RationalPolynomial.zero()
        moved = RationalPolynomial((c, 1))
        for coeff in reversed(self._coeffs):
            result = result * moved + coeff
        return result

    def reflect(self) -> RationalPolynomial:
        """Returns the polynomial ``x -> f(-x)``."""
        return RationalPolynomial(c if p % 2 == 0 else -c for p, c in enumerate(self._coeffs))

    def __repr__(self) -> str:
        return f"RationalPolynomial([{', '.join(str(c) for c in self._coeffs)}])"


def _as_polynomial(value: RationalPolynomial | RationalLike) -> RationalPolynomial:
    if isinstance(value, RationalPolynomial):
        return value
    return RationalPolynomial.constant(value)


class _RecurrenceTable(ABC, Generic[T]):
    """
    Grow-only cache of a sequence defined by a recurrence on all previous entries.

    Entries are never evicted. Extension is serialised by a lock; already computed
    entries are read without locking.
    """

    def __init__(self) -> None:
        self._values: List[T] = []
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._values)

    def get(self, n: int) -> T:
        """
        Returns entry ``n``, extending the cache by the recurrence if necessary.

        Raises:
            ValueError: If n is negative.
        """
        if n < 0:
            raise ValueError(f"index must be non-negative, got {n}")
        values = self._values
        if n < len(values):
            return values[n]
        with self._lock:
            start = len(self._values)
            while len(self._values) <= n:
                self._values.append(self._next_value(len(self._values), self._values))
            logger.debug("%s extended from %d to %d entries", type(self).__name__, start, len(self._values))
            return self._values[n]

    @abstractmethod
    def _next_value(self, n: int, previous: List[T]) -> T:
        """Computes entry ``n`` from entries ``0..n-1``."""


class BernoulliTable(_RecurrenceTable[Fraction]):
    """
    Bernoulli numbers B_n^- (B_1 = -1/2) from sum_{j=0}^{n} C(n+1, j) B_j = 0, B_0 = 1.
    """

    def _next_value(self, n: int, previous: List[Fraction]) -> Fraction:
        if n == 0:
            return Fraction(1)
        if n > 1 and n % 2 == 1:
            return Fraction(0)
        acc = sum((binomial(n + 1, j) * previous[j] for j in range(n)), Fraction(0))
        return -acc / (n + 1)


class EulerTable(_RecurrenceTable[int]):
    """
    Euler numbers E_n from sum_{j even} C(n, j) E_j = 0 for even n >= 2, E_0 = 1, E_odd = 0.
    """

    def _next_value(self, n: int, previous: List[int]) -> int:
        if n == 0:
            return 1
        if n % 2 == 1:
            return 0
        return -sum(binomial(n, j) * previous[j] for j in range(0, n, 2))


_BERNOULLI = BernoulliTable()
_EULER = EulerTable()


def bernoulli_minus(n: int) -> Fraction:
    """
    Bernoulli number B_n in the modern convention B_1 = -1/2.

    Example:
        >>> bernoulli_minus(2)
        Fraction(1, 6)
    """
    return _BERNOULLI.get(n)


def bernoulli_plus(n: int) -> Fraction:
    """
    Bernoulli number in the convention B_1 = +1/2, i.e. ``(-1)**n * bernoulli_minus(n)``.

    The two conventions only differ at n = 1. The formulas for values at negative
    integers need this one.
    """
    value = _BERNOULLI.get(n)
    return -value if n % 2 == 1 else value


def bernoulli_even(k: int) -> Fraction:
    """B_{2k}; both conventions agree on even indices."""
    return _BERNOULLI.get(2 * k)


def euler_number(n: int) -> int:
    """
    Euler number E_n (E_0 = 1, E_2 = -1, E_4 = 5, odd indices vanish).
    """
    return _EULER.get(n)


@lru_cache(maxsize=None)
def bernoulli_poly(n: int) -> RationalPolynomial:
    """
    Bernoulli polynomial B_n(x) = sum_j C(n, j) B_j^- x^{n-j}.

    It satisfies B_n(x+1) - B_n(x) = n * x^{n-1}.

    Example:
        >>> bernoulli_poly(2).coefficients
        (Fraction(1, 6), Fraction(-1, 1), Fraction(1, 1))
    """
    if n < 0:
        raise ValueError(f"index must be non-negative, got {n}")
    coeffs = [Fraction(0)] * (n + 1)
    for j in range(n + 1):
        coeffs[n - j] = binomial(n, j) * bernoulli_minus(j)
    return RationalPolynomial(coeffs)
