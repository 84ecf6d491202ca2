"""Operation-count benchmark harness for the three algorithm families.

Each family runs over seeded generated traces at a sweep of lengths and
reports total elementary operations next to the normalization its bound
is stated in: quadratic for the brute-force rows, delta*log2(delta) for
the row-jumping strategy, linear for the ladder walk.
"""

from __future__ import annotations

import math
import time

from .generators import generate_planted_trace, generate_random_trace
from .hierarchy import oracle_max_t, rowbased_max_t
from .snapshots import OpCounter, SnapshotAlgebra
from .walks import optimal_max_t

__all__ = ["FAMILIES", "DEFAULT_DELTAS", "bench", "format_rows"]

FAMILIES = ("naive", "rowbased", "optimal")

DEFAULT_DELTAS = {
    "naive": (100, 200),
    "rowbased": (100, 1000, 10000),
    "optimal": (100, 1000, 10000),
}


def _run_family(family: str, delta: int, seed: int, n: int) -> dict:
    if family == "naive":
        # a tree planted across the whole length keeps every row connected,
        # so the row-by-row climb exhibits its full quadratic cost
        trace, _ = generate_planted_trace(n, delta, delta, seed)
        runner = oracle_max_t
        norm_kind = "ops/delta^2"
        norm_base = float(delta) ** 2
    elif family == "rowbased":
        # complete graphs keep every row connected: the climb spans all
        # log2(delta) power rows, the regime its bound is stated for
        trace = generate_random_trace(n, delta, 1.0, seed)
        runner = rowbased_max_t
        norm_kind = "ops/(delta*log2(delta))"
        norm_base = delta * math.log2(max(delta, 2))
    elif family == "optimal":
        trace = generate_random_trace(n, delta, 0.6, seed)
        runner = optimal_max_t
        norm_kind = "ops/delta"
        norm_base = float(delta)
    else:
        raise ValueError(f"unknown family {family!r}, expected one of {FAMILIES}")
    algebra = SnapshotAlgebra(OpCounter())
    start = time.perf_counter()
    result = runner(trace, algebra)
    elapsed = time.perf_counter() - start
    ops = algebra.counter.total()
    return {
        "family": family,
        "delta": delta,
        "n": n,
        "result": result,
        "intersections": algebra.counter.intersections,
        "connectivity_tests": algebra.counter.connectivity_tests,
        "ops": ops,
        "normalized": ops / norm_base,
        "norm_kind": norm_kind,
        "wall_time_s": elapsed,
    }


def bench(
    families=FAMILIES,
    deltas: dict | None = None,
    seed: int = 0,
    n: int = 8,
) -> list[dict]:
    """Run the requested families and return one row dict per (family, delta)."""
    sweep = dict(DEFAULT_DELTAS)
    if deltas:
        sweep.update(deltas)
    rows = []
    for family in families:
        for delta in sweep[family]:
            rows.append(_run_family(family, delta, seed, n))
    return rows


def format_rows(rows: list[dict]) -> str:
    """Tab-separated table with a header line."""
    columns = [
        "family",
        "delta",
        "n",
        "result",
        "intersections",
        "connectivity_tests",
        "ops",
        "normalized",
        "norm_kind",
        "wall_time_s",
    ]
    lines = ["\t".join(columns)]
    for row in rows:
        cells = []
        for col in columns:
            value = row[col]
            if isinstance(value, float):
                cells.append(f"{value:.6g}")
            else:
                cells.append(str(value))
        lines.append("\t".join(cells))
    return "\n".join(lines) + "\n"
