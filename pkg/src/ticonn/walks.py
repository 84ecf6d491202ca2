"""Linear-operation walks over the hierarchy, offline and streaming.

The fixed-T check traverses row T left to right: at trigger indices it
builds a full left ladder whose top is the current window, and between
triggers each window costs one right-ladder increment plus one combine.
The maximum-T walk climbs the first column until a disconnected graph,
then moves right along the hierarchy, dropping one row per disconnected
window; the row it ends on is the answer. Both have online counterparts
that consume one snapshot at a time in amortized constant operations.
"""

from __future__ import annotations

from .errors import InvalidIntervalError, OperandMismatchError
from .ladders import (
    build_left_ladder,
    combine,
    increment_right_ladder,
    new_right_ladder,
)
from .snapshots import GraphAlgebra, OpCounter, SnapshotAlgebra

__all__ = [
    "optimal_t_interval_connected",
    "optimal_max_t",
    "MaxTWalk",
    "online_t_checker",
    "online_max_t_checker",
    "OnlineTChecker",
    "OnlineMaxTChecker",
]


def _default_algebra(algebra: GraphAlgebra | None) -> GraphAlgebra:
    return algebra if algebra is not None else SnapshotAlgebra(OpCounter())


class _SnapshotBuffer:
    """Trace-like view over pushed snapshots, pruned from the left."""

    def __init__(self):
        self.delta = 0
        self._snaps: dict[int, object] = {}
        self._low = 1

    def push(self, g) -> int:
        self.delta += 1
        self._snaps[self.delta] = g
        return self.delta

    def snapshot(self, i: int):
        return self._snaps[i]

    def prune_below(self, i: int):
        while self._low < i:
            self._snaps.pop(self._low, None)
            self._low += 1


class _ShapeGuard:
    """Rejects pushes whose vertex count or mode differ from the first."""

    def __init__(self):
        self._shape = None

    def check(self, g):
        n = getattr(g, "n", None)
        mode = getattr(g, "mode", None)
        if n is None and mode is None:
            return
        if self._shape is None:
            self._shape = (n, mode)
        elif self._shape != (n, mode):
            raise OperandMismatchError(
                f"snapshot shape {(n, mode)} does not match the stream's {self._shape}"
            )


def optimal_t_interval_connected(
    trace, T: int, algebra: GraphAlgebra, stats: dict | None = None
) -> bool:
    """Row-T walk with ladders: true iff every height-T window is connected."""
    counts = {"left_ladders": 0, "right_ladders": 0}
    try:
        return _row_walk(trace, T, algebra, counts)
    finally:
        if stats is not None:
            stats.update(counts)


def _row_walk(trace, k: int, algebra: GraphAlgebra, counts: dict) -> bool:
    delta = trace.delta
    if not 1 <= k <= delta:
        raise InvalidIntervalError(f"T={k} outside 1..{delta}")
    i = 1
    nxt = 1
    ladder = None
    tower = None
    while i <= delta - k + 1:
        if i >= nxt:
            nxt = i + k
            tower = None
            ladder = build_left_ladder(
                trace, i + k - 1, k, algebra, stop_on_disconnected=True
            )
            counts["left_ladders"] += 1
            if ladder.stopped_at is not None:
                # a window containing this disconnected sub-window also fails
                return False
            verdict = ladder.test_rung(k, algebra)  # tested during the build
        else:
            kp = k - nxt + i
            if tower is None:
                tower = new_right_ladder(trace, nxt)
                counts["right_ladders"] += 1
            while tower.length < kp:
                increment_right_ladder(tower, trace, algebra)
            cell = combine(ladder, tower, i, k, algebra)
            verdict = algebra.is_connected(cell.payload)
        if not verdict:
            return False
        i += 1
    return True


class MaxTWalk:
    """Running maximum T over the snapshots pushed so far.

    Processes one hierarchy diagonal per push: while the first column is
    still fully connected the walk climbs it (value = number of pushes);
    afterwards it settles each new diagonal by descending from the current
    row until a connected window is found (value = that row) or row 1 fails
    (value = 0 forever). Feeding a whole trace therefore answers the
    offline maximum-T question with the same operation count.
    """

    def __init__(self, algebra: GraphAlgebra, visited: list | None = None):
        self.algebra = algebra
        self.visited = visited
        self.buf = _SnapshotBuffer()
        self.value = 0
        self.dead = False
        self._climbing = True
        self._column = None
        self.i = 1
        self.k = 0
        self.next = 2
        self._left = None
        self._tower = None

    def _log(self, i: int, k: int):
        if self.visited is not None:
            self.visited.append((i, k))

    def push(self, g) -> int:
        j = self.buf.push(g)
        if self.dead:
            return 0
        if self._climbing:
            if self._column is None:
                self._column = new_right_ladder(self.buf, 1)
            else:
                increment_right_ladder(self._column, self.buf, self.algebra)
            self._log(1, j)
            if self._column.test_rung(j, self.algebra):
                self.value = j
                return j
            if j == 1:
                self.dead = True
                self.value = 0
                return 0
            # leave the column: resume one row below, one step right
            self._climbing = False
            self._column = None
            self.k = j - 1
            self.i = 2
            self.next = 2
        return self._settle(j)

    def _settle(self, j: int) -> int:
        """Walk the diagonal ending at snapshot j down to its verdict."""
        alg = self.algebra
        while True:
            i, k = self.i, self.k
            assert i + k - 1 == j
            self._log(i, k)
            if self._left is not None and self._left.anchor == j:
                verdict = self._left.test_rung(k, alg)
            elif i >= self.next:
                self.next = i + k
                self._tower = None
                self._left = build_left_ladder(
                    self.buf, j, k, alg, stop_on_disconnected=True
                )
                if self._left.stopped_at is not None:
                    si, sk = self._left.stopped_at
                    if sk == 1:
                        break
                    # resume below-right of the disconnected rung; the rung
                    # under the new position was just tested connected
                    self.i, self.k = si + 1, sk - 1
                    continue
                verdict = self._left.test_rung(k, alg)
            else:
                kp = k - self.next + i
                if self._tower is None:
                    self._tower = new_right_ladder(self.buf, self.next)
                while self._tower.length < kp:
                    increment_right_ladder(self._tower, self.buf, alg)
                cell = combine(self._left, self._tower, i, k, alg)
                verdict = alg.is_connected(cell.payload)
            if verdict:
                self.value = k
                self.i += 1
                self.buf.prune_below(self.i)
                return k
            if k == 1:
                break
            # the connected window one row down at this index was already
            # seen on the previous diagonal, so step diagonally without it
            self.k -= 1
            self.i += 1
        self.dead = True
        self.value = 0
        return 0


def optimal_max_t(
    trace, algebra: GraphAlgebra, visited: list | None = None
) -> int:
    """Largest T for which the trace is T-interval connected, by walk."""
    walk = MaxTWalk(algebra, visited)
    for idx in range(1, trace.delta + 1):
        walk.push(trace.snapshot(idx))
    return walk.value


class _TWindowEngine:
    """Sliding height-T window evaluator: one verdict per push after warmup.

    Windows are grouped into blocks of T. The block's first window is the
    top of a freshly built left ladder (T-1 intersections in that push);
    each later window combines a ladder rung with a growing right ladder
    (at most two intersections), so a push costs amortized ~2 operations.
    """

    def __init__(self, T: int, algebra: GraphAlgebra):
        if T < 1:
            raise InvalidIntervalError(f"T={T} must be at least 1")
        self.T = T
        self.algebra = algebra
        self.buf = _SnapshotBuffer()
        self._ladder = None
        self._tower = None

    def push(self, g) -> bool | None:
        j = self.buf.push(g)
        T, alg = self.T, self.algebra
        if j < T:
            return None
        p = j - T + 1  # window start
        self.buf.prune_below(p)
        offset = (p - 1) % T
        if offset == 0:
            self._ladder = build_left_ladder(self.buf, j, T, alg)
            self._tower = None
            cell = self._ladder.rung(T)
        else:
            if self._tower is None:
                self._tower = new_right_ladder(self.buf, self._ladder.anchor + 1)
            while self._tower.length < offset:
                increment_right_ladder(self._tower, self.buf, alg)
            cell = combine(self._ladder, self._tower, p, T, alg)
        return alg.is_connected(cell.payload)


class OnlineTChecker:
    """Streaming fixed-T checker: None for the first T-1 pushes, then bools."""

    def __init__(self, T: int, algebra: GraphAlgebra | None = None):
        self.algebra = _default_algebra(algebra)
        self._engine = _TWindowEngine(T, self.algebra)
        self._guard = _ShapeGuard()

    @property
    def counter(self) -> OpCounter:
        return self.algebra.counter

    def push(self, g) -> bool | None:
        self._guard.check(g)
        return self._engine.push(g)


class OnlineMaxTChecker:
    """Streaming prefix maximum T: one integer per push."""

    def __init__(self, algebra: GraphAlgebra | None = None):
        self.algebra = _default_algebra(algebra)
        self._walk = MaxTWalk(self.algebra)
        self._guard = _ShapeGuard()

    @property
    def counter(self) -> OpCounter:
        return self.algebra.counter

    def push(self, g) -> int:
        self._guard.check(g)
        return self._walk.push(g)


def online_t_checker(T: int, algebra: GraphAlgebra | None = None) -> OnlineTChecker:
    return OnlineTChecker(T, algebra)


def online_max_t_checker(algebra: GraphAlgebra | None = None) -> OnlineMaxTChecker:
    return OnlineMaxTChecker(algebra)
