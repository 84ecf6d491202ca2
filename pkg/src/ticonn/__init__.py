"""Toolkit for interval connectivity of evolving-graph traces.

A trace is a sequence of graph snapshots over a fixed vertex set. The
package decides whether every window of T consecutive snapshots has a
connected intersection graph, computes the largest such T, and streams
per-snapshot stability values, while counting every binary intersection
and connectivity test as one elementary operation.
"""

from __future__ import annotations

from .errors import (
    InvalidIntervalError,
    MissingRungError,
    OperandMismatchError,
    OutOfTraceError,
    ParseError,
    PatternError,
    TicError,
)
from .generators import generate_planted_trace, generate_random_trace
from .hierarchy import (
    IntervalGraph,
    Row,
    naive_row_above,
    oracle_max_t,
    oracle_t_interval_connected,
    parallel_row_from_row,
    row_from_row,
    row_one,
    rowbased_max_t,
    rowbased_t_interval_connected,
)
from .ladders import (
    LeftLadder,
    RightLadder,
    build_left_ladder,
    combine,
    increment_right_ladder,
    new_right_ladder,
)
from .patterns import PatternAlgebra, PatternTrace
from .report import RunReport, input_digest
from .snapshots import (
    DIRECTED,
    MODES,
    UNDIRECTED,
    GraphAlgebra,
    OpCounter,
    Snapshot,
    SnapshotAlgebra,
    Trace,
    snapshot_equals,
)
from .stability import (
    StabilityStream,
    StabilityVerdict,
    TStabilityStream,
    stability_stream,
    t_stability_stream,
)
from .traceio import (
    parse_pattern,
    parse_trace,
    read_trace_events,
    serialize_pattern,
    serialize_trace,
)
from .walks import (
    MaxTWalk,
    OnlineMaxTChecker,
    OnlineTChecker,
    online_max_t_checker,
    online_t_checker,
    optimal_max_t,
    optimal_t_interval_connected,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # errors
    "TicError",
    "OperandMismatchError",
    "InvalidIntervalError",
    "OutOfTraceError",
    "PatternError",
    "MissingRungError",
    "ParseError",
    # elements and algebras
    "Snapshot",
    "Trace",
    "OpCounter",
    "GraphAlgebra",
    "SnapshotAlgebra",
    "snapshot_equals",
    "UNDIRECTED",
    "DIRECTED",
    "MODES",
    "PatternAlgebra",
    "PatternTrace",
    # window hierarchy
    "IntervalGraph",
    "Row",
    "row_one",
    "naive_row_above",
    "row_from_row",
    "parallel_row_from_row",
    "oracle_t_interval_connected",
    "oracle_max_t",
    "rowbased_t_interval_connected",
    "rowbased_max_t",
    # ladders
    "LeftLadder",
    "RightLadder",
    "build_left_ladder",
    "new_right_ladder",
    "increment_right_ladder",
    "combine",
    # walks
    "optimal_t_interval_connected",
    "optimal_max_t",
    "MaxTWalk",
    "OnlineTChecker",
    "OnlineMaxTChecker",
    "online_t_checker",
    "online_max_t_checker",
    # stability
    "StabilityVerdict",
    "StabilityStream",
    "TStabilityStream",
    "stability_stream",
    "t_stability_stream",
    # io, generators, reporting
    "parse_trace",
    "serialize_trace",
    "read_trace_events",
    "parse_pattern",
    "serialize_pattern",
    "generate_random_trace",
    "generate_planted_trace",
    "RunReport",
    "input_digest",
]
