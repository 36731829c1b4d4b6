"""Structural analysis: degrees, minimum degree, and k-vertex-connectivity.

The k-connectivity decision combines linear-time special cases (k = 1
connectivity, k = 2 via cut vertices) with Menger-style vertex-disjoint
path checks for k >= 3: unit-vertex-capacity max-flow between a minimum
degree vertex and each non-neighbor, plus pairwise checks among that
vertex's neighbors. All checks are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from . import kernels
from .graphs import Graph

__all__ = [
    "DegreeReport",
    "degree_report",
    "min_degree_at_least",
    "is_k_connected",
    "vertex_connectivity",
]


@dataclass(frozen=True)
class DegreeReport:
    degrees: np.ndarray  # degrees[i-1] is vertex i's degree
    min_degree: int
    histogram: dict[int, int]  # degree value -> node count
    count_ell: dict[int, int]  # requested ell -> number of degree-ell nodes


def degree_report(g: Graph, ells: list[int] | None = None) -> DegreeReport:
    """Exact degree statistics, including X_ell counts for requested ells."""
    d = g.degrees()
    counts = np.bincount(d)
    histogram = {int(v): int(c) for v, c in enumerate(counts) if c > 0}
    ells = ells or []
    count_ell = {ell: histogram.get(ell, 0) for ell in ells}
    return DegreeReport(d, int(d.min()), histogram, count_ell)


def min_degree_at_least(g: Graph, k: int) -> bool:
    """Whether every vertex has degree >= k (vacuously true for k = 0)."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return True
    return int(g.degrees().min()) >= k


def _disjoint_paths_at_least(
    adj: list[set[int]], s: int, t: int, k: int
) -> bool:
    """Whether there are >= k internally vertex-disjoint s-t paths (s, t non-adjacent).

    Unit-capacity max-flow on the split digraph: vertex v becomes arc
    v_in -> v_out of capacity 1. Augments one BFS path at a time, stopping
    at k (0-based vertices; node x_in = 2x, x_out = 2x + 1).
    """
    n = len(adj)
    residual: list[set[int]] = [set() for _ in range(2 * n)]
    for v in range(n):
        residual[2 * v].add(2 * v + 1)
    for u in range(n):
        for v in adj[u]:
            residual[2 * u + 1].add(2 * v)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while flow < k:
        prev = [-1] * (2 * n)
        prev[source] = source
        queue = [source]
        while queue and prev[sink] == -1:
            nxt = []
            for u in queue:
                for v in residual[u]:
                    if prev[v] == -1:
                        prev[v] = u
                        nxt.append(v)
            queue = nxt
        if prev[sink] == -1:
            return False
        v = sink
        while v != source:
            u = prev[v]
            residual[u].discard(v)
            residual[v].add(u)
            v = u
        flow += 1
    return True


def _adjacency_sets(g: Graph) -> list[set[int]]:
    adj: list[set[int]] = [set() for _ in range(g.n)]
    for u, v in g.edge_array.tolist():
        adj[u - 1].add(v - 1)
        adj[v - 1].add(u - 1)
    return adj


def _is_connected(g: Graph) -> bool:
    indptr, indices = g.csr()
    return bool(kernels.connected(g.n, indptr, indices))


def is_k_connected(g: Graph, k: int) -> bool:
    """Whether the vertex connectivity is at least k (requires n >= k + 1)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    n = g.n
    if n < k + 1:
        return False
    if 2 * g.m == n * (n - 1):  # complete graph: connectivity n - 1
        return True
    if not min_degree_at_least(g, k):
        return False
    if not _is_connected(g):
        return False
    if k == 1:
        return True
    if k == 2:
        indptr, indices = g.csr()
        return not kernels.has_articulation(n, indptr, indices)
    adj = _adjacency_sets(g)
    degrees = g.degrees()
    v = int(np.argmin(degrees))  # fixed vertex: minimum degree
    for t in range(n):
        if t != v and t not in adj[v]:
            if not _disjoint_paths_at_least(adj, v, t, k):
                return False
    for x, y in combinations(sorted(adj[v]), 2):
        if y not in adj[x]:
            if not _disjoint_paths_at_least(adj, x, y, k):
                return False
    return True


def vertex_connectivity(g: Graph) -> int:
    """Largest k with is_k_connected true; 0 for disconnected or single-vertex."""
    if g.n == 1:
        return 0
    if not _is_connected(g):
        return 0
    if 2 * g.m == g.n * (g.n - 1):
        return g.n - 1
    upper = min(int(g.degrees().min()), g.n - 1)
    k = 1
    while k + 1 <= upper and is_k_connected(g, k + 1):
        k += 1
    return k
