"""Left/right ladders and the single-intersection combine rule.

A ladder is a column of interval graphs climbing the hierarchy: rung k of a
right ladder anchored at j covers snapshots j..j+k-1; rung k of a left
ladder anchored at i covers i-k+1..i. Each new rung costs one intersection,
so a ladder of length l costs exactly l-1 (rung 1 is the snapshot itself).
Any window spanning a left ladder and the right ladder anchored just after
it is one further intersection (combine).
"""

from __future__ import annotations

from .errors import InvalidIntervalError, MissingRungError, OutOfTraceError
from .hierarchy import IntervalGraph
from .snapshots import GraphAlgebra

__all__ = [
    "LeftLadder",
    "RightLadder",
    "build_left_ladder",
    "new_right_ladder",
    "increment_right_ladder",
    "combine",
]


class _Ladder:
    """Shared rung storage with memoized per-rung connectivity verdicts."""

    def __init__(self, anchor: int, trace):
        self.anchor = anchor
        self.trace = trace
        self.rungs: list[IntervalGraph] = []
        self._verdicts: dict[int, bool] = {}

    @property
    def delta(self) -> int:
        # read through to the source so streaming buffers may keep growing
        return self.trace.delta

    @property
    def length(self) -> int:
        return len(self.rungs)

    def has_rung(self, height: int) -> bool:
        return 1 <= height <= len(self.rungs)

    def rung(self, height: int) -> IntervalGraph:
        if not self.has_rung(height):
            raise MissingRungError(
                f"rung of height {height} not on the ladder at index {self.anchor}"
            )
        return self.rungs[height - 1]

    def test_rung(self, height: int, algebra: GraphAlgebra) -> bool:
        """Rung connectivity; consumes one test on first query, then cached."""
        verdict = self._verdicts.get(height)
        if verdict is None:
            verdict = algebra.is_connected(self.rung(height).payload)
            self._verdicts[height] = verdict
        return verdict


class LeftLadder(_Ladder):
    """Rungs of heights 1.. all ending at the anchor (the bottom-right foot).

    Rung k sits at index anchor-k+1. `stopped_at` is the (index, height) of
    the first disconnected rung when a guarded build halted early, else None.
    """

    def __init__(self, anchor: int, trace):
        super().__init__(anchor, trace)
        self.stopped_at: tuple[int, int] | None = None


class RightLadder(_Ladder):
    """Rungs of heights 1.. all starting at the anchor; rung k sits at it."""


def build_left_ladder(
    trace,
    foot_index: int,
    length: int,
    algebra: GraphAlgebra,
    stop_on_disconnected: bool = False,
) -> LeftLadder:
    """Grow a left ladder upward from snapshot foot_index.

    A full build of length l consumes exactly l-1 intersections and no
    connectivity tests. With stop_on_disconnected set, every rung is tested
    as it appears (verdicts cached on the ladder) and the build halts at the
    first disconnected rung, recording it in `stopped_at`.
    """
    delta = trace.delta
    if length < 1:
        raise InvalidIntervalError(f"ladder length {length} must be at least 1")
    if not 1 <= foot_index <= delta:
        raise InvalidIntervalError(f"ladder foot {foot_index} outside 1..{delta}")
    if foot_index - length + 1 < 1:
        raise InvalidIntervalError(
            f"ladder of length {length} at {foot_index} would pass the trace start"
        )
    ladder = LeftLadder(foot_index, trace)
    ladder.rungs.append(IntervalGraph(foot_index, 1, trace.snapshot(foot_index)))
    for height in range(1, length + 1):
        if stop_on_disconnected and not ladder.test_rung(height, algebra):
            ladder.stopped_at = (foot_index - height + 1, height)
            break
        if height == length:
            break
        below = ladder.rungs[height - 1]
        index = foot_index - height
        payload = algebra.intersect(trace.snapshot(index), below.payload)
        ladder.rungs.append(IntervalGraph(index, height + 1, payload))
    return ladder


def new_right_ladder(trace, anchor: int) -> RightLadder:
    """Length-1 right ladder: rung 1 is the snapshot itself, no operations."""
    if not 1 <= anchor <= trace.delta:
        raise InvalidIntervalError(f"ladder anchor {anchor} outside 1..{trace.delta}")
    ladder = RightLadder(anchor, trace)
    ladder.rungs.append(IntervalGraph(anchor, 1, trace.snapshot(anchor)))
    return ladder


def increment_right_ladder(
    rl: RightLadder, trace, algebra: GraphAlgebra
) -> RightLadder:
    """Grow the ladder by one rung, consuming exactly one intersection."""
    if rl.anchor + rl.length > trace.delta:
        raise OutOfTraceError(
            f"rung of height {rl.length + 1} at index {rl.anchor} "
            f"would pass the trace end {trace.delta}"
        )
    top = rl.rungs[-1]
    payload = algebra.intersect(top.payload, trace.snapshot(rl.anchor + rl.length))
    rl.rungs.append(IntervalGraph(rl.anchor, rl.length + 1, payload))
    return rl


def combine(
    left: LeftLadder, right: RightLadder, i: int, k: int, algebra: GraphAlgebra
) -> IntervalGraph:
    """The window (i, k) from an adjacent ladder pair in one intersection.

    The window must span the boundary between the ladders (left anchored at
    j-1, right at j): its left part is a left-ladder rung, its right part a
    right-ladder rung, and their intersection is the whole window. Windows
    lying on a ladder return the existing rung for free.
    """
    j = right.anchor
    if left.anchor + 1 != j:
        raise InvalidIntervalError(
            f"ladders at {left.anchor} and {j} are not adjacent"
        )
    if k < 1 or i < 1 or i + k - 1 > left.delta:
        raise InvalidIntervalError(f"window ({i}, {k}) outside the hierarchy")
    if i == j:
        return right.rung(k)
    if i + k - 1 == left.anchor:
        return left.rung(k)
    if not (i < j and k > j - i):
        raise InvalidIntervalError(
            f"window ({i}, {k}) does not span the ladder boundary at {j}"
        )
    arm = left.rung(j - i)
    rung = right.rung(k - j + i)
    return IntervalGraph(i, k, algebra.intersect(arm.payload, rung.payload))
