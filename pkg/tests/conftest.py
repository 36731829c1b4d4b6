import itertools

import numpy as np
import pytest

from keygraph.graphs import Graph, er_graph, kout_graph, sample_intersection, sample_pairing
from keygraph.seeds import SeedSpec


def brute_force_vertex_connectivity(g: Graph) -> int:
    """Exhaustive oracle: smallest vertex cut, by deleting every subset."""
    n = g.n
    if n == 1:
        return 0
    edges = g.edges()
    if len(edges) == n * (n - 1) // 2:
        return n - 1

    def connected_after_removal(removed: set[int]) -> bool:
        alive = [v for v in range(1, n + 1) if v not in removed]
        if len(alive) <= 1:
            return True
        adj = {v: set() for v in alive}
        for u, v in edges:
            if u in adj and v in adj:
                adj[u].add(v)
                adj[v].add(u)
        seen = {alive[0]}
        stack = [alive[0]]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(alive)

    for size in range(0, n - 1):
        for subset in itertools.combinations(range(1, n + 1), size):
            if not connected_after_removal(set(subset)):
                return size
    return n - 1


def random_small_graph(index: int, master_seed: int = 1234) -> Graph:
    """Mixed-family small graph (ER, K-out, or intersection), n <= 8."""
    seed = SeedSpec(master_seed, "smallgraph", index)
    rng = seed.rng()
    n = int(rng.integers(2, 9))
    family = index % 3
    if family == 0:
        return er_graph(n, float(rng.random()), seed.child("er"))
    K = int(rng.integers(1, n))
    if family == 1:
        return kout_graph(sample_pairing(n, K, seed.child("kout")))
    return sample_intersection(n, K, float(rng.random()), seed.child("inter"))


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
