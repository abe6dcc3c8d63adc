"""
The reordered integer line and the segments it induces.

Integers are ordered by comparing ``-1/a`` (with ``-1/0 = -inf``), which gives::

    0, 1, 2, 3, ..., -3, -2, -1

so that every non-negative integer precedes every negative one and the negatives lie
"beyond infinity". A segment ``Z_{a,b}`` is the run from ``a`` to ``b`` in this order when
``a`` precedes or equals ``b``, and the complement of the open run ``(b, a)`` otherwise.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from zetakit.shared_types import ErrorCode, ZetaKitError

# Global module logger
logger = logging.getLogger(__name__)


def order_key(a: int) -> Fraction | float:
    """
    Sort key realising the new order: ``-1/a`` as an extended rational.

    Example:
        >>> sorted([-1, 3, 0, -5, 1], key=order_key)
        [0, 1, 3, -5, -1]
    """
    if a == 0:
        return float("-inf")
    return Fraction(-1, a)


def precedes(a: int, b: int) -> bool:
    """
    True iff ``a`` strictly precedes ``b`` in the order ``[0, 1, 2, ..., -2, -1]``.
    """
    return order_key(a) < order_key(b)


def compare(a: int, b: int) -> int:
    """Three-way comparison in the new order: -1 if a precedes b, 0 if equal, 1 otherwise."""
    if a == b:
        return 0
    return -1 if precedes(a, b) else 1


class SegmentKind(Enum):
    """
    Shape of a segment ``Z_{a,b}``.
    """
    STANDARD = "standard"
    "Ordinary finite run ``{a, a+1, ..., b}`` with a <= b of the same sign."

    WRAPPED = "wrapped"
    "Union ``[a..-1] U [0..b]`` for a succeeding b in the new order."


@dataclass(frozen=True)
class Segment:
    """
    Descriptor of ``Z_{a,b}``. Infinite segments are never materialised.

    Attributes:
        kind (SegmentKind): Standard run or wrapped union.
        a (int): First element in the new order.
        b (int): Last element in the new order.
    """
    kind: SegmentKind
    a: int
    b: int

    def __post_init__(self):
        if self.kind is SegmentKind.STANDARD:
            if self.a > self.b or (self.a < 0) != (self.b < 0):
                raise ValueError(f"invalid standard segment ({self.a}, {self.b})")
        elif not precedes(self.b, self.a):
            raise ValueError(f"invalid wrapped segment ({self.a}, {self.b})")

    def contains(self, u: int) -> bool:
        """Membership test, see :func:`contains`."""
        return contains(self, u)

    @property
    def is_finite(self) -> bool:
        """
        Standard runs are finite. A wrapped segment is finite only when it starts among
        the negatives and ends among the non-negatives, e.g. ``[-3..-1] U [0..2]``.
        """
        if self.kind is SegmentKind.STANDARD:
            return True
        return self.a < 0 <= self.b

    def members(self) -> range:
        """
        Members of a finite segment in ordinary ascending order.

        Raises:
            ZetaKitError: ``INFINITE_SEGMENT`` for infinite segments.
        """
        if not self.is_finite:
            raise ZetaKitError(ErrorCode.INFINITE_SEGMENT, str(self))
        return range(self.a, self.b + 1)

    def excluded(self) -> range:
        """
        The finite set of integers a wrapped segment leaves out, i.e. the open run
        ``(b, a)`` of the new order, in ordinary ascending order.

        Raises:
            ZetaKitError: ``INFINITE_SEGMENT`` if the excluded run is itself infinite
                (wrapped segments from a negative ``a`` to a non-negative ``b``).
        """
        if self.kind is SegmentKind.STANDARD:
            raise ValueError("only wrapped segments have an excluded interval")
        if self.a < 0 <= self.b:
            raise ZetaKitError(ErrorCode.INFINITE_SEGMENT, f"complement of {self}")
        return range(self.b + 1, self.a)

    def __str__(self):
        if self.kind is SegmentKind.STANDARD:
            return f"[{self.a}..{self.b}]"
        if self.b < 0:
            # both ends negative: the run passes through all non-negatives
            return f"Z \\ ({self.b}..{self.a})"
        return f"[{self.a}..-1] U [0..{self.b}]"


def make_segment(a: int, b: int) -> Segment:
    """
    Builds the segment ``Z_{a,b}``.

    * a precedes or equals b and both lie on the same side of zero: a standard run.
    * b precedes a: the wrapped union ``[a..-1] U [0..b]``. For a >= 1 this is the
      infinite set missing the ordinary interval (b, a); for negative a and
      non-negative b it is the finite run from a to b.

    Raises:
        ZetaKitError: ``UNSUPPORTED_SEGMENT`` for a >= 0 > b, where a precedes b and the run
            passes through infinity without wrapping (e.g. ``Z_{1,-1}``).

    Example:
        >>> str(make_segment(5, 2))
        '[5..-1] U [0..2]'
    """
    if a == b or precedes(a, b):
        if (a < 0) != (b < 0):
            raise ZetaKitError(ErrorCode.UNSUPPORTED_SEGMENT, f"Z_{{{a},{b}}}")
        return Segment(SegmentKind.STANDARD, a, b)
    logger.debug("Z_{%d,%d} wraps through zero", a, b)
    return Segment(SegmentKind.WRAPPED, a, b)


def contains(seg: Segment, u: int) -> bool:
    """
    Membership of ``u`` in a segment.

    A standard segment holds ``a <= u <= b``. A wrapped segment holds every integer
    except those strictly between b and a in the new order.
    """
    if seg.kind is SegmentKind.STANDARD:
        return seg.a <= u <= seg.b
    return not (precedes(seg.b, u) and precedes(u, seg.a))
