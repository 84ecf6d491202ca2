"""Text formats for traces and synthetic connectivity patterns.

Trace file (UTF-8): a header line `n delta mode` with mode `undirected` or
`directed`, then for each step a line `step i m` followed by m edge lines
`u v` (0-based vertex ids, u < v in undirected mode). Lines starting with
`#` and blank lines are ignored. Pattern file: a line `delta`, then lines
`i k` naming the disconnected windows (start index, height).
"""

from __future__ import annotations

from .errors import ParseError
from .snapshots import MODES, Snapshot, Trace

__all__ = [
    "read_trace_events",
    "parse_trace",
    "serialize_trace",
    "parse_pattern",
    "serialize_pattern",
]


def _tokens(lines):
    """Yield (line_number, token_list) for content lines, skipping noise."""
    for number, raw in enumerate(lines, start=1):
        text = raw.strip()
        if not text or text.startswith("#"):
            continue
        yield number, text.split()


def _int(value: str, what: str, line: int) -> int:
    try:
        return int(value)
    except ValueError:
        raise ParseError(f"{what} {value!r} is not an integer", line) from None


def read_trace_events(lines):
    """Incrementally parse trace text from any iterable of lines.

    Yields ("header", n, delta, mode) once, then ("snapshot", i, Snapshot)
    as each step block completes, so pipes can be processed as they flush.
    Raises ParseError (carrying the line number) on malformed input.
    """
    stream = _tokens(lines)

    try:
        line, parts = next(stream)
    except StopIteration:
        raise ParseError("empty input, expected header 'n delta mode'", 1) from None
    if len(parts) != 3:
        raise ParseError("header must be 'n delta mode'", line)
    n = _int(parts[0], "vertex count", line)
    delta = _int(parts[1], "trace length", line)
    mode = parts[2]
    if n < 1:
        raise ParseError(f"vertex count {n} must be at least 1", line)
    if delta < 1:
        raise ParseError(f"trace length {delta} must be at least 1", line)
    if mode not in MODES:
        raise ParseError(f"mode {mode!r} must be one of {sorted(MODES)}", line)
    yield "header", n, delta, mode

    seen = 0
    line = 0
    for line, parts in stream:
        if parts[0] != "step" or len(parts) != 3:
            raise ParseError("expected a 'step i m' line", line)
        index = _int(parts[1], "step index", line)
        count = _int(parts[2], "edge count", line)
        if index != seen + 1:
            raise ParseError(f"step index {index}, expected {seen + 1}", line)
        if index > delta:
            raise ParseError(f"step {index} exceeds declared length {delta}", line)
        if count < 0:
            raise ParseError(f"edge count {count} must not be negative", line)
        edges = []
        edge_set = set()
        for _ in range(count):
            try:
                eline, eparts = next(stream)
            except StopIteration:
                raise ParseError(
                    f"step {index} ends early: expected {count} edges, got {len(edges)}",
                    line,
                ) from None
            if len(eparts) != 2:
                raise ParseError("expected an edge line 'u v'", eline)
            u = _int(eparts[0], "endpoint", eline)
            v = _int(eparts[1], "endpoint", eline)
            if not (0 <= u < n and 0 <= v < n):
                raise ParseError(f"endpoint out of range 0..{n - 1}", eline)
            if u == v:
                raise ParseError(f"self-loop {u} {v} not allowed", eline)
            if mode == "undirected" and u > v:
                raise ParseError(
                    f"undirected edge {u} {v} must list the smaller endpoint first",
                    eline,
                )
            if (u, v) in edge_set:
                raise ParseError(f"duplicate edge {u} {v}", eline)
            edge_set.add((u, v))
            edges.append((u, v))
        seen = index
        yield "snapshot", index, Snapshot(n, edges, mode)
    if seen != delta:
        raise ParseError(f"declared {delta} steps but found {seen}", max(line, 1))


def parse_trace(text: str) -> Trace:
    """Parse a complete trace document."""
    n = mode = None
    snapshots = []
    for event in read_trace_events(text.splitlines()):
        if event[0] == "header":
            _, n, _, mode = event
        else:
            snapshots.append(event[2])
    return Trace(n, mode, snapshots)


def serialize_trace(trace: Trace) -> str:
    """Canonical text form; parse(serialize(t)) == t."""
    out = [f"{trace.n} {trace.delta} {trace.mode}"]
    for index in range(1, trace.delta + 1):
        snap = trace.snapshot(index)
        edges = snap.edges()
        out.append(f"step {index} {len(edges)}")
        out.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(out) + "\n"


def parse_pattern(text: str) -> tuple[int, frozenset]:
    """Parse a synthetic pattern: delta plus disconnected (index, height) cells."""
    stream = _tokens(text.splitlines())
    try:
        line, parts = next(stream)
    except StopIteration:
        raise ParseError("empty input, expected a 'delta' line", 1) from None
    if len(parts) != 1:
        raise ParseError("pattern header must be a single integer delta", line)
    delta = _int(parts[0], "delta", line)
    if delta < 1:
        raise ParseError(f"delta {delta} must be at least 1", line)
    cells = set()
    for line, parts in stream:
        if len(parts) != 2:
            raise ParseError("expected a cell line 'i k'", line)
        i = _int(parts[0], "index", line)
        k = _int(parts[1], "height", line)
        if not (1 <= i and 1 <= k and i + k - 1 <= delta):
            raise ParseError(f"cell ({i}, {k}) outside the hierarchy for delta={delta}", line)
        cells.add((i, k))
    return delta, frozenset(cells)


def serialize_pattern(delta: int, cells) -> str:
    out = [str(delta)]
    out.extend(f"{i} {k}" for i, k in sorted(cells))
    return "\n".join(out) + "\n"
