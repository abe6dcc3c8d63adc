import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from zetakit.order import (
    Segment,
    SegmentKind,
    compare,
    contains,
    make_segment,
    order_key,
    precedes,
)
from zetakit.shared_types import ErrorCode, ZetaKitError


def test_precedes_examples():
    assert precedes(0, 1)
    assert precedes(7, -5)
    assert not precedes(3, 3)


def test_displayed_order():
    assert sorted([-1, 3, 0, -5, 1, -2, 2], key=order_key) == [0, 1, 2, 3, -5, -2, -1]


def test_totality():
    for a in range(-200, 201):
        for b in range(-200, 201):
            holds = [precedes(a, b), a == b, precedes(b, a)]
            assert holds.count(True) == 1


def test_transitivity():
    rng = random.Random(7)
    for _ in range(10_000):
        a, b, c = (rng.randint(-200, 200) for _ in range(3))
        if precedes(a, b) and precedes(b, c):
            assert precedes(a, c)


@given(st.integers(min_value=-10**6, max_value=10**6).filter(lambda x: x != 0))
def test_zero_is_first(x):
    assert precedes(0, x)


@given(st.integers(min_value=-10**6, max_value=10**6).filter(lambda x: x != -1))
def test_minus_one_is_last(x):
    assert precedes(x, -1)


def test_compare():
    assert compare(4, 4) == 0
    assert compare(4, -4) == -1
    assert compare(-4, 4) == 1
    assert compare(-3, -2) == -1


def test_make_segment_kinds():
    assert make_segment(2, 5) == Segment(SegmentKind.STANDARD, 2, 5)
    assert make_segment(5, 2) == Segment(SegmentKind.WRAPPED, 5, 2)
    assert make_segment(-4, -2) == Segment(SegmentKind.STANDARD, -4, -2)
    assert make_segment(3, 3).kind is SegmentKind.STANDARD
    assert make_segment(-3, 2).kind is SegmentKind.WRAPPED


def test_crossing_segment_is_unsupported():
    with pytest.raises(ZetaKitError) as exc:
        make_segment(1, -1)
    assert exc.value.error_code is ErrorCode.UNSUPPORTED_SEGMENT


def test_invalid_descriptor_rejected():
    with pytest.raises(ValueError):
        Segment(SegmentKind.STANDARD, 5, 2)
    with pytest.raises(ValueError):
        Segment(SegmentKind.WRAPPED, 2, 5)


def test_contains_examples():
    wrapped = make_segment(5, 2)
    assert contains(wrapped, 6)
    assert not contains(wrapped, 3)
    assert contains(make_segment(2, 5), 2)
    assert wrapped.contains(-1000)
    assert wrapped.contains(0)


def test_wrapped_excludes_exactly_the_open_interval():
    rng = random.Random(11)
    for _ in range(200):
        a = rng.randint(1, 60)
        b = rng.randint(0, a - 1)
        seg = make_segment(a, b)
        for u in range(-80, 80):
            assert seg.contains(u) == (not b < u < a)
        assert list(seg.excluded()) == list(range(b + 1, a))


def test_finite_wrapped_segment():
    seg = make_segment(-3, 2)
    assert seg.is_finite
    assert list(seg.members()) == [-3, -2, -1, 0, 1, 2]
    assert all(seg.contains(u) for u in range(-3, 3))
    assert not seg.contains(3)
    assert not seg.contains(-4)
    assert str(seg) == "[-3..-1] U [0..2]"


def test_negative_wrapped_segment_text():
    seg = make_segment(-2, -4)
    assert seg.kind is SegmentKind.WRAPPED
    assert list(seg.excluded()) == [-3]
    assert str(seg) == "Z \\ (-4..-2)"
    assert str(make_segment(5, 2)) == "[5..-1] U [0..2]"


def test_infinite_segment_is_not_enumerated():
    seg = make_segment(5, 2)
    assert not seg.is_finite
    with pytest.raises(ZetaKitError) as exc:
        seg.members()
    assert exc.value.error_code is ErrorCode.INFINITE_SEGMENT
    with pytest.raises(ValueError):
        make_segment(2, 5).excluded()
