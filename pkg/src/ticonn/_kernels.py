"""Array kernels for the two elementary graph operations.

Edges are stored as sorted int64 arrays of encoded keys (u * n + v), so
intersection is a linear merge and connectivity runs straight over the keys.
The hot paths are jitted with numba when it is available; the pure-python
fallbacks below implement identical semantics.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "merge_intersect",
    "undirected_connected",
    "directed_strongly_connected",
    "HAVE_NUMBA",
]


def _merge_intersect_py(a, b):
    out = np.empty(min(a.size, b.size), np.int64)
    i = j = k = 0
    na, nb = a.size, b.size
    while i < na and j < nb:
        x = a[i]
        y = b[j]
        if x == y:
            out[k] = x
            k += 1
            i += 1
            j += 1
        elif x < y:
            i += 1
        else:
            j += 1
    return out[:k]


def _undirected_connected_py(keys, n):
    if n <= 1:
        return True
    parent = np.arange(n)
    comps = n
    for t in range(keys.size):
        key = keys[t]
        u = key // n
        v = key % n
        while parent[u] != u:
            parent[u] = parent[parent[u]]
            u = parent[u]
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        if u != v:
            parent[u] = v
            comps -= 1
            if comps == 1:
                return True
    return comps == 1


def _directed_strongly_connected_py(keys, n):
    # one SCC containing everything <=> vertex 0 reaches all, forwards and
    # backwards; keys are sorted by source so CSR offsets come from searchsorted
    if n <= 1:
        return True
    if keys.size < n:
        return False
    for flip in range(2):
        if flip == 0:
            srcs = keys // n
            dsts = keys % n
        else:
            rev = np.sort((keys % n) * n + keys // n)
            srcs = rev // n
            dsts = rev % n
        starts = np.searchsorted(srcs, np.arange(n), side="left")
        ends = np.searchsorted(srcs, np.arange(n), side="right")
        seen = np.zeros(n, np.bool_)
        seen[0] = True
        stack = [0]
        count = 1
        while stack:
            u = stack.pop()
            for t in range(starts[u], ends[u]):
                w = dsts[t]
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    stack.append(w)
        if count != n:
            return False
    return True


try:
    from numba import njit

    HAVE_NUMBA = True

    @njit(cache=True)
    def merge_intersect(a, b):  # pragma: no cover - jitted
        out = np.empty(min(a.size, b.size), np.int64)
        i = j = k = 0
        na, nb = a.size, b.size
        while i < na and j < nb:
            x = a[i]
            y = b[j]
            if x == y:
                out[k] = x
                k += 1
                i += 1
                j += 1
            elif x < y:
                i += 1
            else:
                j += 1
        return out[:k]

    @njit(cache=True)
    def undirected_connected(keys, n):  # pragma: no cover - jitted
        if n <= 1:
            return True
        parent = np.arange(n)
        comps = n
        for t in range(keys.size):
            key = keys[t]
            u = key // n
            v = key % n
            while parent[u] != u:
                parent[u] = parent[parent[u]]
                u = parent[u]
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            if u != v:
                parent[u] = v
                comps -= 1
                if comps == 1:
                    return True
        return comps == 1

    @njit(cache=True)
    def directed_strongly_connected(keys, n):  # pragma: no cover - jitted
        if n <= 1:
            return True
        if keys.size < n:
            return False
        for flip in range(2):
            if flip == 0:
                srcs = keys // n
                dsts = keys % n
            else:
                rev = np.sort((keys % n) * n + keys // n)
                srcs = rev // n
                dsts = rev % n
            verts = np.arange(n)
            starts = np.searchsorted(srcs, verts, side="left")
            ends = np.searchsorted(srcs, verts, side="right")
            seen = np.zeros(n, np.bool_)
            seen[0] = True
            stack = np.empty(n, np.int64)
            stack[0] = 0
            top = 1
            count = 1
            while top > 0:
                top -= 1
                u = stack[top]
                for t in range(starts[u], ends[u]):
                    w = dsts[t]
                    if not seen[w]:
                        seen[w] = True
                        count += 1
                        stack[top] = w
                        top += 1
            if count != n:
                return False
        return True

except ImportError:  # pragma: no cover - exercised only without numba
    HAVE_NUMBA = False
    merge_intersect = _merge_intersect_py
    undirected_connected = _undirected_connected_py
    directed_strongly_connected = _directed_strongly_connected_py
