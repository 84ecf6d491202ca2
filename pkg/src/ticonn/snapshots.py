"""Static graph snapshots, evolving-graph traces, and the counted algebra.

A Snapshot is one static graph over vertices 0..n-1 at a single time step.
Edges live in a sorted int64 array of encoded keys (u * n + v), which makes
equality canonical and intersection a linear merge. All algorithm-facing
work goes through a GraphAlgebra so that every binary intersection and
every connectivity test is tallied as exactly one elementary operation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import OperandMismatchError

UNDIRECTED = "undirected"
DIRECTED = "directed"
MODES = (UNDIRECTED, DIRECTED)

__all__ = [
    "UNDIRECTED",
    "DIRECTED",
    "MODES",
    "Snapshot",
    "Trace",
    "OpCounter",
    "GraphAlgebra",
    "SnapshotAlgebra",
    "snapshot_equals",
]


class Snapshot:
    """One static graph: vertex count, mode, and a canonical edge array.

    Undirected edges are stored once with the smaller endpoint first, so two
    snapshots are equal exactly when their serialized edge lists match.
    """

    __slots__ = ("n", "mode", "keys")

    def __init__(self, n: int, edges, mode: str = UNDIRECTED):
        if mode not in MODES:
            raise ValueError(f"unknown mode {mode!r}")
        if n < 1:
            raise ValueError("vertex count must be at least 1")
        self.n = n
        self.mode = mode
        seen = set()
        enc = []
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop ({u}, {v}) is not allowed")
            if mode == UNDIRECTED and u > v:
                u, v = v, u
            key = u * n + v
            if key in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add(key)
            enc.append(key)
        arr = np.array(sorted(enc), dtype=np.int64)
        self.keys = arr

    @classmethod
    def from_keys(cls, n: int, keys: np.ndarray, mode: str = UNDIRECTED) -> "Snapshot":
        """Trusted fast path: keys must already be sorted, unique, in range."""
        snap = cls.__new__(cls)
        snap.n = n
        snap.mode = mode
        snap.keys = keys
        return snap

    @property
    def edge_count(self) -> int:
        return int(self.keys.size)

    def edges(self) -> list[tuple[int, int]]:
        n = self.n
        return [(int(k) // n, int(k) % n) for k in self.keys]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Snapshot):
            return NotImplemented
        return (
            self.n == other.n
            and self.mode == other.mode
            and self.keys.size == other.keys.size
            and bool(np.array_equal(self.keys, other.keys))
        )

    def __hash__(self):
        return hash((self.n, self.mode, self.keys.tobytes()))

    def __repr__(self):
        return f"Snapshot(n={self.n}, edges={self.edges()!r}, mode={self.mode!r})"


@dataclass
class Trace:
    """An ordered sequence of snapshots over a common vertex set."""

    n: int
    mode: str
    snapshots: list

    def __post_init__(self):
        if not self.snapshots:
            raise ValueError("a trace needs at least one snapshot")
        for idx, s in enumerate(self.snapshots, start=1):
            if s.n != self.n or s.mode != self.mode:
                raise ValueError(f"snapshot {idx} does not match the trace header")

    @property
    def delta(self) -> int:
        return len(self.snapshots)

    def snapshot(self, i: int):
        """1-based access, matching hierarchy index conventions."""
        if not 1 <= i <= self.delta:
            raise IndexError(f"snapshot index {i} outside 1..{self.delta}")
        return self.snapshots[i - 1]


@dataclass
class OpCounter:
    """Tally of elementary operations consumed by an algebra."""

    intersections: int = 0
    connectivity_tests: int = 0

    def total(self) -> int:
        return self.intersections + self.connectivity_tests

    def as_tuple(self) -> tuple[int, int]:
        return (self.intersections, self.connectivity_tests)


class GraphAlgebra:
    """The two elementary operations behind a counting facade.

    Every public intersect / is_connected call costs exactly one tick on the
    attached counter, regardless of element size. Subclasses provide the
    uncounted implementations.
    """

    def __init__(self, counter: OpCounter | None = None):
        self.counter = counter if counter is not None else OpCounter()

    def intersect(self, a, b):
        self.counter.intersections += 1
        return self._intersect(a, b)

    def is_connected(self, x) -> bool:
        self.counter.connectivity_tests += 1
        return self._is_connected(x)

    def _intersect(self, a, b):
        raise NotImplementedError

    def _is_connected(self, x) -> bool:
        raise NotImplementedError


class SnapshotAlgebra(GraphAlgebra):
    """Concrete algebra over Snapshot elements."""

    def _intersect(self, a: Snapshot, b: Snapshot) -> Snapshot:
        if not isinstance(a, Snapshot) or not isinstance(b, Snapshot):
            raise OperandMismatchError("operands must be snapshots")
        if a.n != b.n or a.mode != b.mode:
            raise OperandMismatchError(
                f"cannot intersect n={a.n}/{a.mode} with n={b.n}/{b.mode}"
            )
        keys = _kernels.merge_intersect(a.keys, b.keys)
        return Snapshot.from_keys(a.n, keys, a.mode)

    def _is_connected(self, g: Snapshot) -> bool:
        if g.mode == DIRECTED:
            return bool(_kernels.directed_strongly_connected(g.keys, g.n))
        return bool(_kernels.undirected_connected(g.keys, g.n))


def snapshot_equals(a: Snapshot, b: Snapshot) -> bool:
    """True iff n, mode, and canonical edge lists are identical."""
    return a == b
