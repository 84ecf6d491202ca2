"""Synthetic algebra whose elements are time intervals, not concrete graphs.

A PatternAlgebra is built from a set of (index, height) cells declared
disconnected. A queried interval is disconnected iff it contains one of the
listed cells, which makes the disconnected region upward-closed by
construction: any superinterval of a disconnected interval still contains
the same listed cell. This is enough to replay walk executions without
inventing edge sets that realize them.
"""

from __future__ import annotations

from .errors import PatternError
from .snapshots import GraphAlgebra, OpCounter

__all__ = ["PatternAlgebra", "PatternTrace"]


class PatternTrace:
    """Trace stand-in whose row-1 elements are unit intervals (i, i)."""

    def __init__(self, delta: int):
        if delta < 1:
            raise PatternError("pattern length must be at least 1")
        self.delta = delta

    def snapshot(self, i: int):
        if not 1 <= i <= self.delta:
            raise IndexError(f"snapshot index {i} outside 1..{self.delta}")
        return (i, i)


class PatternAlgebra(GraphAlgebra):
    """Interval algebra driven by a declared set of disconnected cells.

    Elements are (lo, hi) windows, 1-based and inclusive. Intersection is
    only defined when the operands overlap or abut into one contiguous
    window; the algorithms in this package never request anything else.
    """

    def __init__(self, delta: int, disconnected, counter: OpCounter | None = None):
        super().__init__(counter)
        if delta < 1:
            raise PatternError("pattern length must be at least 1")
        self.delta = delta
        cells = set()
        for cell in disconnected:
            try:
                i, k = cell
            except (TypeError, ValueError):
                raise PatternError(f"bad cell {cell!r}, expected (index, height)")
            if k < 1 or i < 1 or i + k - 1 > delta:
                raise PatternError(
                    f"cell ({i}, {k}) does not fit a trace of length {delta}"
                )
            cells.add((int(i), int(k)))
        self.disconnected = frozenset(cells)
        # precomputed as (lo, hi) windows for the containment test
        self._windows = sorted((i, i + k - 1) for i, k in cells)

    def trace(self) -> PatternTrace:
        return PatternTrace(self.delta)

    def _check_element(self, x):
        try:
            lo, hi = x
        except (TypeError, ValueError):
            raise PatternError(f"bad element {x!r}, expected (lo, hi)")
        if not 1 <= lo <= hi <= self.delta:
            raise PatternError(f"window ({lo}, {hi}) outside 1..{self.delta}")
        return lo, hi

    def _intersect(self, a, b):
        alo, ahi = self._check_element(a)
        blo, bhi = self._check_element(b)
        if alo > bhi + 1 or blo > ahi + 1:
            raise PatternError(
                f"windows ({alo}, {ahi}) and ({blo}, {bhi}) are not contiguous"
            )
        return (min(alo, blo), max(ahi, bhi))

    def _is_connected(self, x) -> bool:
        lo, hi = self._check_element(x)
        return not any(lo <= wlo and whi <= hi for wlo, whi in self._windows)
