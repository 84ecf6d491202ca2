"""Streaming per-snapshot stability: fixed-height verdicts and maximum T_i.

The stability value of the i-th snapshot is the largest T such that the T
most recent snapshots have a connected intersection. The stream walks the
hierarchy one diagonal per push: after a connected window it climbs one
row for the next snapshot; on a disconnected window it steps down-right
along the same diagonal. Windows are materialized from ladders exactly as
in the offline walks, and every window is intersected and tested at most
once (verdicts are memoized), which keeps the amortized cost per push
constant.
"""

from __future__ import annotations

from dataclasses import dataclass

from .snapshots import GraphAlgebra, OpCounter
from .walks import _default_algebra, _ShapeGuard, _TWindowEngine

__all__ = [
    "StabilityVerdict",
    "TStabilityStream",
    "StabilityStream",
    "t_stability_stream",
    "stability_stream",
]


@dataclass(frozen=True)
class StabilityVerdict:
    """Per-push outcome: None before the first full window in fixed-T mode,
    a bool for fixed-T stability, or the integer stability value T_i."""

    step: int
    value: bool | int | None


class TStabilityStream:
    """Fixed-T stability: push i yields whether the last T snapshots form a
    connected-intersection window (None while i < T)."""

    def __init__(self, T: int, algebra: GraphAlgebra | None = None):
        self.algebra = _default_algebra(algebra)
        self._engine = _TWindowEngine(T, self.algebra)
        self._guard = _ShapeGuard()
        self._step = 0

    @property
    def counter(self) -> OpCounter:
        return self.algebra.counter

    def push(self, g) -> StabilityVerdict:
        self._guard.check(g)
        self._step += 1
        return StabilityVerdict(self._step, self._engine.push(g))


class StabilityStream:
    """Maximum-T stability: push i yields T_i.

    State (i, k) names the window of height k starting at index i; during
    push j every window under consideration ends at snapshot j. Windows
    come from four sources, mirroring the offline walks: row 1 is the
    snapshot itself; at trigger indices a fresh left ladder is grown under
    the walk (relocating down-right past any disconnected rung); while
    climbing a column each window extends the one below it; otherwise one
    right-ladder rung plus one combine suffice. Disconnected right-ladder
    rungs relocate the walk below-right of themselves, re-triggering a
    ladder build at the new position.
    """

    def __init__(self, algebra: GraphAlgebra | None = None):
        self.algebra = _default_algebra(algebra)
        self._guard = _ShapeGuard()
        self.j = 0
        self.i = 1
        self.k = 1
        self.next = 2
        self._snaps: dict[int, object] = {}
        self._cells: dict[tuple[int, int], object] = {}
        self._verdicts: dict[tuple[int, int], bool] = {}
        self._heights: dict[int, list[int]] = {}  # index -> stored heights
        self._low = 1

    @property
    def counter(self) -> OpCounter:
        return self.algebra.counter

    def _store(self, i: int, k: int, payload):
        self._cells[(i, k)] = payload
        self._heights.setdefault(i, []).append(k)

    def _test(self, i: int, k: int) -> bool:
        verdict = self._verdicts.get((i, k))
        if verdict is None:
            verdict = self.algebra.is_connected(self._cells[(i, k)])
            self._verdicts[(i, k)] = verdict
        return verdict

    def _prune(self):
        # the walk never looks left of its current index again
        while self._low < self.i:
            for h in self._heights.pop(self._low, ()):
                self._cells.pop((self._low, h), None)
                self._verdicts.pop((self._low, h), None)
            self._snaps.pop(self._low, None)
            self._low += 1

    def _relocate_below_right(self, idx: int, height: int):
        """Resume under a disconnected window at (idx, height)."""
        if height == 1:
            self.i, self.k = idx, 1
        else:
            self.i, self.k = idx + 1, height - 1

    def _build_ladder(self, i: int, k: int) -> bool:
        """Trigger: grow a left ladder from the diagonal's snapshot up to
        the walk window, testing each rung. Returns False after relocating
        past a disconnected rung, True once the walk window is in place."""
        alg = self.algebra
        self.next = i + k
        foot = i + k - 1
        if (foot, 1) not in self._cells:
            self._store(foot, 1, self._snaps[foot])
        for h in range(1, k):
            idx = foot - h + 1
            if not self._test(idx, h):
                self._relocate_below_right(idx, h)
                return False
            if (idx - 1, h + 1) not in self._cells:
                payload = alg.intersect(self._snaps[idx - 1], self._cells[(idx, h)])
                self._store(idx - 1, h + 1, payload)
        return True

    def _build_from_intersection(self, i: int, k: int) -> bool:
        """One right-ladder rung plus one combine. Returns False after
        relocating past a disconnected rung."""
        alg = self.algebra
        nxt = self.next
        kp = k - nxt + i
        assert kp >= 1
        if (nxt, kp) not in self._cells:
            if kp == 1:
                self._store(nxt, 1, self._snaps[nxt])
            else:
                payload = alg.intersect(
                    self._cells[(nxt, kp - 1)], self._snaps[nxt + kp - 1]
                )
                self._store(nxt, kp, payload)
            if not self._test(nxt, kp):
                self._relocate_below_right(nxt, kp)
                return False
        elif not self._verdicts.get((nxt, kp), True):
            self._relocate_below_right(nxt, kp)
            return False
        arm = self._cells[(i, nxt - i)]
        self._store(i, k, alg.intersect(arm, self._cells[(nxt, kp)]))
        return True

    def push(self, g) -> StabilityVerdict:
        self._guard.check(g)
        self.j += 1
        j = self.j
        self._snaps[j] = g
        alg = self.algebra
        while True:
            i, k = self.i, self.k
            assert i + k - 1 == j
            if (i, k) not in self._cells:
                if k == 1:
                    self._store(i, 1, self._snaps[i])
                elif i >= self.next:
                    if not self._build_ladder(i, k):
                        continue
                elif i == self.next - 1 and (i, k - 1) in self._cells:
                    payload = alg.intersect(self._cells[(i, k - 1)], self._snaps[j])
                    self._store(i, k, payload)
                else:
                    if not self._build_from_intersection(i, k):
                        continue
            if self._test(i, k):
                # the window one row up ending here is known disconnected,
                # so k is exactly T_j; aim one row higher for the next push
                self.k += 1
                self._prune()
                return StabilityVerdict(j, k)
            if k == 1:
                self.next = i + 2
                self.i += 1
                self._prune()
                return StabilityVerdict(j, 0)
            self.k -= 1
            self.i += 1


def t_stability_stream(T: int, algebra: GraphAlgebra | None = None) -> TStabilityStream:
    return TStabilityStream(T, algebra)


def stability_stream(algebra: GraphAlgebra | None = None) -> StabilityStream:
    return StabilityStream(algebra)
