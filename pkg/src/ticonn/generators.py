"""Seeded trace generators for tests and benchmarks."""

from __future__ import annotations

import numpy as np

from .hierarchy import oracle_max_t
from .snapshots import MODES, UNDIRECTED, OpCounter, Snapshot, SnapshotAlgebra, Trace

__all__ = ["generate_random_trace", "generate_planted_trace"]


def _pair_keys(n: int, mode: str) -> np.ndarray:
    """All possible edge keys (u*n+v) in ascending order."""
    if mode == UNDIRECTED:
        u, v = np.triu_indices(n, k=1)
        return (u * n + v).astype(np.int64)
    keys = np.arange(n * n, dtype=np.int64)
    return keys[keys // n != keys % n]


def generate_random_trace(
    n: int,
    delta: int,
    edge_probability: float,
    seed: int | None = None,
    mode: str = UNDIRECTED,
) -> Trace:
    """Each step's edge set is sampled independently; fixed seed, fixed trace."""
    if n < 1:
        raise ValueError(f"vertex count {n} must be at least 1")
    if delta < 1:
        raise ValueError(f"trace length {delta} must be at least 1")
    if not 0.0 <= edge_probability <= 1.0:
        raise ValueError(f"edge probability {edge_probability} outside [0, 1]")
    if mode not in MODES:
        raise ValueError(f"mode {mode!r} must be one of {sorted(MODES)}")
    rng = np.random.default_rng(seed)
    keys = _pair_keys(n, mode)
    snapshots = []
    for _ in range(delta):
        mask = rng.random(keys.size) < edge_probability
        snapshots.append(Snapshot.from_keys(n, keys[mask], mode))
    return Trace(n, mode, snapshots)


def _random_tree_keys(n: int, rng: np.random.Generator) -> set[int]:
    """Keys of a uniform-ish random spanning tree (random attachment order)."""
    order = rng.permutation(n)
    keys = set()
    for idx in range(1, n):
        child = int(order[idx])
        parent = int(order[int(rng.integers(0, idx))])
        u, v = (parent, child) if parent < child else (child, parent)
        keys.add(u * n + v)
    return keys


def generate_planted_trace(
    n: int,
    delta: int,
    planted_T: int,
    seed: int | None = None,
    noise: float = 0.1,
) -> tuple[Trace, int]:
    """Trace with a spanning tree held fixed within each aligned window of
    length planted_T and re-drawn between windows, plus per-step noise edges.

    Returns the trace and its true maximum T as computed by the row oracle
    (the noise and the window seams mean it need not equal planted_T).
    """
    if n < 3:
        raise ValueError(f"vertex count {n} must be at least 3")
    if not 1 <= planted_T <= delta:
        raise ValueError(f"planted_T {planted_T} outside 1..{delta}")
    rng = np.random.default_rng(seed)
    all_keys = _pair_keys(n, UNDIRECTED)
    snapshots = []
    tree: set[int] = set()
    for step in range(delta):
        if step % planted_T == 0:
            tree = _random_tree_keys(n, rng)
        mask = rng.random(all_keys.size) < noise
        step_keys = set(int(x) for x in all_keys[mask]) | tree
        keys = np.array(sorted(step_keys), dtype=np.int64)
        snapshots.append(Snapshot.from_keys(n, keys, UNDIRECTED))
    trace = Trace(n, UNDIRECTED, snapshots)
    ground_truth = oracle_max_t(trace, SnapshotAlgebra(OpCounter()))
    return trace, ground_truth
