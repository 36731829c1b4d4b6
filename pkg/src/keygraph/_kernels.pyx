# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: K-subset sampling and connectivity DFS.

Must stay behaviourally identical to ``_kernels_py`` — same inputs
(including pre-drawn random integers) give bit-identical output.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

IMPLEMENTATION = "cython"


def sample_picks(int n, int K, cnp.int64_t[:, :] r):
    """Partial Fisher-Yates selection of K candidates per node.

    ``r`` has shape (K, n) with ``r[t, i]`` uniform on ``[t, n-2]``.
    Candidate codes 0..n-2 enumerate {1..n}\\{i}; returns 1-based ids
    with shape (n, K).
    """
    picks_arr = np.empty((n, K), dtype=np.int64)
    pool_arr = np.empty(n - 1, dtype=np.int64)
    cdef cnp.int64_t[:, :] picks = picks_arr
    cdef cnp.int64_t[:] pool = pool_arr
    cdef Py_ssize_t i, t
    cdef cnp.int64_t j, tmp, code
    for i in range(n):
        for t in range(n - 1):
            pool[t] = t
        for t in range(K):
            j = r[t, i]
            tmp = pool[t]
            pool[t] = pool[j]
            pool[j] = tmp
        for t in range(K):
            code = pool[t]
            picks[i, t] = code + 1 if code < i else code + 2
    return picks_arr


def connected(int n, cnp.int64_t[:] indptr, cnp.int64_t[:] indices):
    """Whether the CSR graph is connected (single vertex counts as connected)."""
    if n <= 1:
        return True
    seen_arr = np.zeros(n, dtype=np.int8)
    stack_arr = np.empty(n, dtype=np.int64)
    cdef cnp.int8_t[:] seen = seen_arr
    cdef cnp.int64_t[:] stack = stack_arr
    cdef Py_ssize_t top = 0
    cdef cnp.int64_t u, v, k, count = 1
    stack[0] = 0
    seen[0] = 1
    top = 1
    while top > 0:
        top -= 1
        u = stack[top]
        for k in range(indptr[u], indptr[u + 1]):
            v = indices[k]
            if not seen[v]:
                seen[v] = 1
                count += 1
                stack[top] = v
                top += 1
    return count == n


def has_articulation(int n, cnp.int64_t[:] indptr, cnp.int64_t[:] indices):
    """Whether a connected CSR graph has a cut vertex (iterative Tarjan DFS)."""
    if n <= 2:
        return False
    disc_arr = np.full(n, -1, dtype=np.int64)
    low_arr = np.zeros(n, dtype=np.int64)
    parent_arr = np.full(n, -1, dtype=np.int64)
    it_arr = np.asarray(indptr)[:-1].astype(np.int64).copy()
    stack_arr = np.empty(n, dtype=np.int64)
    cdef cnp.int64_t[:] disc = disc_arr
    cdef cnp.int64_t[:] low = low_arr
    cdef cnp.int64_t[:] parent = parent_arr
    cdef cnp.int64_t[:] it = it_arr
    cdef cnp.int64_t[:] stack = stack_arr
    cdef Py_ssize_t top = 1
    cdef cnp.int64_t u, v, p, time = 1, root_children = 0
    stack[0] = 0
    disc[0] = 0
    low[0] = 0
    while top > 0:
        u = stack[top - 1]
        if it[u] < indptr[u + 1]:
            v = indices[it[u]]
            it[u] += 1
            if disc[v] == -1:
                parent[v] = u
                disc[v] = time
                low[v] = time
                time += 1
                if u == 0:
                    root_children += 1
                stack[top] = v
                top += 1
            elif v != parent[u]:
                if disc[v] < low[u]:
                    low[u] = disc[v]
        else:
            top -= 1
            p = parent[u]
            if p != -1:
                if low[u] < low[p]:
                    low[p] = low[u]
                if p != 0 and low[u] >= disc[p]:
                    return True
    return root_children >= 2
