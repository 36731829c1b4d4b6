"""Pure-Python fallback for the hot kernels.

Mirrors ``_kernels.pyx`` exactly: given the same inputs (including the
pre-drawn random integers) both implementations produce identical output,
so the choice of backend never changes sampled graphs.
"""

from __future__ import annotations

import numpy as np

IMPLEMENTATION = "python"


def sample_picks(n: int, K: int, r: np.ndarray) -> np.ndarray:
    """Partial Fisher-Yates selection of K candidates per node.

    ``r`` has shape (K, n) with ``r[t, i]`` uniform on ``[t, n-2]``.
    Candidate codes 0..n-2 enumerate {1..n}\\{i}; returns 1-based ids
    with shape (n, K).
    """
    picks = np.empty((n, K), dtype=np.int64)
    base = np.arange(n - 1, dtype=np.int64)
    pool = np.empty(n - 1, dtype=np.int64)
    for i in range(n):
        pool[:] = base
        for t in range(K):
            j = r[t, i]
            pool[t], pool[j] = pool[j], pool[t]
        for t in range(K):
            code = pool[t]
            picks[i, t] = code + 1 if code < i else code + 2
    return picks


def connected(n: int, indptr: np.ndarray, indices: np.ndarray) -> bool:
    """Whether the CSR graph is connected (single vertex counts as connected)."""
    if n <= 1:
        return True
    seen = np.zeros(n, dtype=bool)
    stack = [0]
    seen[0] = True
    count = 1
    while stack:
        u = stack.pop()
        for k in range(indptr[u], indptr[u + 1]):
            v = indices[k]
            if not seen[v]:
                seen[v] = True
                count += 1
                stack.append(v)
    return count == n


def has_articulation(n: int, indptr: np.ndarray, indices: np.ndarray) -> bool:
    """Whether a connected CSR graph has a cut vertex (iterative Tarjan DFS)."""
    if n <= 2:
        return False
    disc = np.full(n, -1, dtype=np.int64)
    low = np.zeros(n, dtype=np.int64)
    parent = np.full(n, -1, dtype=np.int64)
    it = indptr[:-1].astype(np.int64).copy()
    stack = [0]
    disc[0] = low[0] = 0
    time = 1
    root_children = 0
    while stack:
        u = stack[-1]
        if it[u] < indptr[u + 1]:
            v = indices[it[u]]
            it[u] += 1
            if disc[v] == -1:
                parent[v] = u
                disc[v] = low[v] = time
                time += 1
                if u == 0:
                    root_children += 1
                stack.append(v)
            elif v != parent[u]:
                if disc[v] < low[u]:
                    low[u] = disc[v]
        else:
            stack.pop()
            p = parent[u]
            if p != -1:
                if low[u] < low[p]:
                    low[p] = low[u]
                if p != 0 and low[u] >= disc[p]:
                    return True
    return root_children >= 2
