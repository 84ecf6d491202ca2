"""Rows of the intersection hierarchy: brute-force and row-based strategies.

Cell (i, k) of the hierarchy is the intersection of snapshots i..i+k-1.
The brute-force oracle builds rows one step at a time; the row-based
strategy jumps between rows (any target in (k, 2k] is one intersection per
element) and binary-searches heights through power-of-two rows.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

from .errors import InvalidIntervalError
from .snapshots import GraphAlgebra

__all__ = [
    "IntervalGraph",
    "Row",
    "row_one",
    "naive_row_above",
    "oracle_t_interval_connected",
    "oracle_max_t",
    "row_from_row",
    "parallel_row_from_row",
    "rowbased_t_interval_connected",
    "rowbased_max_t",
]


@dataclass
class IntervalGraph:
    """An algebra element tagged with its window: index i, height k."""

    index: int
    height: int
    payload: object


@dataclass
class Row:
    """All elements of one hierarchy row, in index order."""

    height: int
    delta: int
    elements: list

    def __post_init__(self):
        if not 1 <= self.height <= self.delta:
            raise InvalidIntervalError(
                f"row height {self.height} outside 1..{self.delta}"
            )

    @property
    def full(self) -> bool:
        return len(self.elements) == self.delta - self.height + 1


def row_one(trace) -> Row:
    """Row 1 wraps the snapshots themselves; no operations consumed."""
    delta = trace.delta
    elems = [IntervalGraph(i, 1, trace.snapshot(i)) for i in range(1, delta + 1)]
    return Row(1, delta, elems)


def naive_row_above(r: Row, algebra: GraphAlgebra) -> Row:
    """Row k+1 from row k: element i is the intersection of neighbours i, i+1."""
    if r.height >= r.delta:
        raise InvalidIntervalError("no row above the top of the hierarchy")
    if not r.full:
        raise InvalidIntervalError("cannot extend a partially built row")
    elems = [
        IntervalGraph(
            i + 1,
            r.height + 1,
            algebra.intersect(r.elements[i].payload, r.elements[i + 1].payload),
        )
        for i in range(len(r.elements) - 1)
    ]
    return Row(r.height + 1, r.delta, elems)


def _row_all_connected(r: Row, algebra: GraphAlgebra) -> bool:
    # stop at the first disconnected element; callers only need the verdict
    return all(algebra.is_connected(e.payload) for e in r.elements)


def oracle_t_interval_connected(trace, T: int, algebra: GraphAlgebra) -> bool:
    """Brute force: build rows 1..T bottom-up, then test every row-T element."""
    delta = trace.delta
    if not 1 <= T <= delta:
        raise InvalidIntervalError(f"T={T} outside 1..{delta}")
    row = row_one(trace)
    for _ in range(T - 1):
        row = naive_row_above(row, algebra)
    return _row_all_connected(row, algebra)


def oracle_max_t(trace, algebra: GraphAlgebra) -> int:
    """Largest T whose row is fully connected; rows are climbed one at a time.

    Connectivity of full rows is monotone (higher cells only lose edges), so
    the climb stops at the first row with a disconnected element.
    """
    row = row_one(trace)
    if not _row_all_connected(row, algebra):
        return 0
    while row.height < trace.delta:
        row = naive_row_above(row, algebra)
        if not _row_all_connected(row, algebra):
            return row.height - 1
    return trace.delta


def _check_jump(base: Row, ell: int):
    if not base.full:
        raise InvalidIntervalError("row jumps need a fully built base row")
    k = base.height
    if not k + 1 <= ell <= 2 * k:
        raise InvalidIntervalError(
            f"target row {ell} outside the valid window ({k}, {2 * k}]"
        )
    if ell > base.delta:
        raise InvalidIntervalError(f"target row {ell} exceeds the trace length")


def row_from_row(base: Row, ell: int, algebra: GraphAlgebra) -> Row:
    """Row ell from row k in one intersection per element, for k < ell <= 2k.

    Element i of the target is base element i intersected with base element
    i + ell - k: the two windows overlap and cover i..i+ell-1 exactly.
    """
    _check_jump(base, ell)
    off = ell - base.height
    count = base.delta - ell + 1
    elems = [
        IntervalGraph(
            i + 1,
            ell,
            algebra.intersect(base.elements[i].payload, base.elements[i + off].payload),
        )
        for i in range(count)
    ]
    return Row(ell, base.delta, elems)


class _LockingAlgebra(GraphAlgebra):
    """Serializes counter updates when workers share one algebra."""

    def __init__(self, inner: GraphAlgebra):
        self._inner = inner
        self._lock = threading.Lock()
        self.counter = inner.counter

    def intersect(self, a, b):
        with self._lock:
            return self._inner.intersect(a, b)

    def is_connected(self, x) -> bool:
        with self._lock:
            return self._inner.is_connected(x)


def parallel_row_from_row(
    base: Row, ell: int, algebra: GraphAlgebra, worker_count: int = 1
) -> Row:
    """row_from_row computed by worker threads under a two-phase read schedule.

    Phase one: worker w reads base element i for each output index i it owns.
    Phase two (after a barrier): it reads base element i + ell - k and writes
    output slot i. No base element is read twice within a phase, each output
    slot has one writer, and the result is identical to the sequential row.
    """
    _check_jump(base, ell)
    if worker_count < 1:
        raise ValueError("worker_count must be at least 1")
    off = ell - base.height
    count = base.delta - ell + 1
    out: list = [None] * count
    locked = _LockingAlgebra(algebra)
    barrier = threading.Barrier(worker_count)
    chunk = -(-count // worker_count) if count else 0
    errors: list[BaseException] = []

    def work(w: int):
        try:
            span = range(w * chunk, min((w + 1) * chunk, count)) if chunk else range(0)
            left = [base.elements[i].payload for i in span]
            barrier.wait()
            for pos, i in enumerate(span):
                right = base.elements[i + off].payload
                out[i] = IntervalGraph(i + 1, ell, locked.intersect(left[pos], right))
        except BaseException as exc:  # surface worker failures to the caller
            errors.append(exc)
            barrier.abort()

    threads = [threading.Thread(target=work, args=(w,)) for w in range(worker_count)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    if errors:
        raise errors[0]
    return Row(ell, base.delta, out)


def _build_row_tested(base: Row, ell: int, algebra: GraphAlgebra, workers: int = 1):
    """Build row ell from base, testing each element as it appears.

    Returns (row, True) when every element is connected; (None, False) as
    soon as one is not, leaving the rest of the row unbuilt. With workers
    above 1 the whole row is built first (in parallel), so the early exit
    then saves only tests, not intersections.
    """
    if workers > 1:
        row = parallel_row_from_row(base, ell, algebra, workers)
        ok = _row_all_connected(row, algebra)
        return (row, True) if ok else (None, False)
    _check_jump(base, ell)
    off = ell - base.height
    count = base.delta - ell + 1
    elems = []
    for i in range(count):
        payload = algebra.intersect(
            base.elements[i].payload, base.elements[i + off].payload
        )
        if not algebra.is_connected(payload):
            return None, False
        elems.append(IntervalGraph(i + 1, ell, payload))
    return Row(ell, base.delta, elems), True


def rowbased_t_interval_connected(
    trace, T: int, algebra: GraphAlgebra, workers: int = 1
) -> bool:
    """Power rows 2, 4, ... below T, then row T tested element by element."""
    delta = trace.delta
    if not 1 <= T <= delta:
        raise InvalidIntervalError(f"T={T} outside 1..{delta}")
    row = row_one(trace)
    if T == 1:
        return _row_all_connected(row, algebra)
    while 2 * row.height < T:
        if workers > 1:
            row = parallel_row_from_row(row, 2 * row.height, algebra, workers)
        else:
            row = row_from_row(row, 2 * row.height, algebra)
    _, ok = _build_row_tested(row, T, algebra, workers)
    return ok


def rowbased_max_t(
    trace, algebra: GraphAlgebra, visited: list | None = None, workers: int = 1
) -> int:
    """Climb power rows until one is disconnected, then binary-search heights.

    Every probed row is derived from the last fully connected power row, the
    only base that the one-intersection jump rule licenses for the whole
    search range. Heights are appended to `visited` in test order.
    """
    delta = trace.delta
    log = visited if visited is not None else []

    base = row_one(trace)
    log.append(1)
    if not _row_all_connected(base, algebra):
        return 0

    # climb: double the height each step, clamping the last step to delta
    while base.height < delta:
        target = min(2 * base.height, delta)
        log.append(target)
        row, ok = _build_row_tested(base, target, algebra, workers)
        if not ok:
            lo, hi = base.height, target
            break
        base = row
    else:
        return delta

    # invariant: row lo is fully connected, row hi is not
    while hi - lo > 1:
        mid = (lo + hi) // 2
        log.append(mid)
        _, ok = _build_row_tested(base, mid, algebra, workers)
        if ok:
            lo = mid
        else:
            hi = mid
    return lo
