"""Small construction helpers shared by the test modules."""

from __future__ import annotations

from hypothesis import strategies as st

from ticonn import (
    DIRECTED,
    UNDIRECTED,
    OpCounter,
    PatternAlgebra,
    Snapshot,
    SnapshotAlgebra,
    Trace,
)


def make_trace(edge_sets, n, mode=UNDIRECTED) -> Trace:
    return Trace(n, mode, [Snapshot(n, sorted(e), mode) for e in edge_sets])


def fresh_algebra() -> SnapshotAlgebra:
    return SnapshotAlgebra(OpCounter())


def pattern_algebra(delta, crosses) -> PatternAlgebra:
    return PatternAlgebra(delta, crosses, OpCounter())


@st.composite
def traces(draw, max_n=5, max_delta=8, modes=(UNDIRECTED, DIRECTED)):
    """(n, mode, edge_sets) triples drawn over small shapes."""
    mode = draw(st.sampled_from(list(modes)))
    n = draw(st.integers(min_value=1, max_value=max_n))
    delta = draw(st.integers(min_value=1, max_value=max_delta))
    if mode == DIRECTED:
        pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    else:
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edge_sets = []
    for _ in range(delta):
        if pairs:
            edge_sets.append(frozenset(draw(st.lists(st.sampled_from(pairs), unique=True))))
        else:
            edge_sets.append(frozenset())
    return n, mode, edge_sets
