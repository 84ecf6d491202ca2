"""Synthetic interval algebra semantics."""

from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from golden import STAB16_CROSSES, STAB16_DELTA, WALK16_CROSSES, WALK16_DELTA
from helpers import pattern_algebra
from oracles import pattern_cell_connected
from ticonn import OpCounter, PatternAlgebra, PatternError


@st.composite
def pattern_instances(draw, max_delta=9):
    delta = draw(st.integers(min_value=1, max_value=max_delta))
    cells = draw(
        st.lists(
            st.tuples(st.integers(1, delta), st.integers(1, delta)).filter(
                lambda c: c[0] + c[1] - 1 <= delta
            ),
            max_size=6,
        )
    )
    return delta, frozenset(cells)


@pytest.mark.parametrize(
    "delta, crosses",
    [(WALK16_DELTA, WALK16_CROSSES), (STAB16_DELTA, STAB16_CROSSES), (4, {(2, 2)})],
)
def test_every_cell_matches_the_containment_oracle(delta, crosses):
    algebra = pattern_algebra(delta, crosses)
    for k in range(1, delta + 1):
        for i in range(1, delta - k + 2):
            got = algebra.is_connected((i, i + k - 1))
            assert got == pattern_cell_connected(crosses, i, k)


@given(pattern_instances())
def test_disconnectedness_is_upward_closed(instance):
    delta, crosses = instance
    algebra = pattern_algebra(delta, crosses)
    for k in range(1, delta + 1):
        for i in range(1, delta - k + 2):
            if not algebra.is_connected((i, i + k - 1)):
                if i + k <= delta:
                    assert not algebra.is_connected((i, i + k))
                if i > 1:
                    assert not algebra.is_connected((i - 1, i + k - 1))


def test_intersection_merges_contiguous_windows():
    algebra = pattern_algebra(10, set())
    assert algebra.intersect((2, 5), (4, 9)) == (2, 9)
    assert algebra.intersect((2, 5), (6, 7)) == (2, 7)  # abutting
    assert algebra.intersect((3, 4), (3, 4)) == (3, 4)
    with pytest.raises(PatternError):
        algebra.intersect((1, 2), (4, 5))  # gap at index 3


def test_elements_are_validated():
    algebra = pattern_algebra(5, set())
    with pytest.raises(PatternError):
        algebra.is_connected((0, 3))
    with pytest.raises(PatternError):
        algebra.is_connected((3, 6))
    with pytest.raises(PatternError):
        algebra.is_connected((4, 2))
    with pytest.raises(PatternError):
        algebra.intersect("junk", (1, 2))


def test_cells_are_validated():
    with pytest.raises(PatternError):
        PatternAlgebra(5, {(3, 4)})  # reaches index 6
    with pytest.raises(PatternError):
        PatternAlgebra(5, {(0, 2)})
    with pytest.raises(PatternError):
        PatternAlgebra(5, {(1, 0)})
    with pytest.raises(PatternError):
        PatternAlgebra(0, set())
    with pytest.raises(PatternError):
        PatternAlgebra(5, ["nonsense"])


def test_trace_yields_unit_windows():
    algebra = pattern_algebra(6, set())
    trace = algebra.trace()
    assert trace.delta == 6
    assert trace.snapshot(3) == (3, 3)
    with pytest.raises(IndexError):
        trace.snapshot(7)


def test_pattern_operations_are_counted():
    counter = OpCounter()
    algebra = PatternAlgebra(8, {(2, 3)}, counter)
    algebra.intersect((1, 3), (2, 6))
    algebra.is_connected((1, 8))
    assert counter.as_tuple() == (1, 1)
