"""Random-graph families: K-out, Erdos-Renyi, and their intersection.

Vertices are 1-based ids 1..n. The K-out graph arises from each node
selecting K distinct partners uniformly at random and ignoring arc
orientation; the intersection graph keeps a K-out edge only when the
corresponding independent on/off channel is on (probability p).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from . import kernels
from .seeds import SeedSpec

__all__ = [
    "PairingTable",
    "Graph",
    "sample_pairing",
    "kout_graph",
    "er_graph",
    "intersect",
    "sample_intersection",
    "nested_er",
    "nested_kout",
    "kout_edge_prob",
    "intersection_edge_prob",
    "GraphFormatError",
]

_ER_CHUNK = 1 << 22  # pairs per Bernoulli batch, bounds memory at large n


class GraphFormatError(ValueError):
    """Malformed graph text; carries the 1-based offending line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _canonical_edges(n: int, edges: Iterable[tuple[int, int]]) -> np.ndarray:
    """Normalize to a unique (m, 2) int64 array with u < v, lexicographic order."""
    arr = np.asarray(sorted({(u, v) if u < v else (v, u) for u, v in edges}), dtype=np.int64)
    if arr.size == 0:
        return np.empty((0, 2), dtype=np.int64)
    u, v = arr[:, 0], arr[:, 1]
    if (u == v).any():
        raise ValueError("self-loops are not allowed")
    if u.min() < 1 or v.max() > n:
        raise ValueError(f"edge endpoints must lie in 1..{n}")
    return arr


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 1..n; immutable after construction."""

    n: int
    edge_array: np.ndarray  # (m, 2) int64, u < v, lexicographically sorted

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        return cls(n, _canonical_edges(n, edges))

    @property
    def m(self) -> int:
        return len(self.edge_array)

    def edges(self) -> frozenset[tuple[int, int]]:
        return frozenset(map(tuple, self.edge_array.tolist()))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.edge_array, other.edge_array)

    def __hash__(self):
        return hash((self.n, self.edge_array.tobytes()))

    def degrees(self) -> np.ndarray:
        """Degree of each vertex, index 0 holds vertex 1."""
        d = np.bincount(self.edge_array.ravel(), minlength=self.n + 1)
        return d[1:]

    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """0-based CSR adjacency (indptr, indices) with sorted neighbor lists."""
        e = self.edge_array - 1
        both = np.concatenate([e, e[:, ::-1]])
        order = np.lexsort((both[:, 1], both[:, 0]))
        both = both[order]
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        np.add.at(indptr, both[:, 0] + 1, 1)
        np.cumsum(indptr, out=indptr)
        return indptr, both[:, 1].copy()

    def neighbors(self, i: int) -> tuple[int, ...]:
        if not 1 <= i <= self.n:
            raise ValueError(f"vertex {i} out of range 1..{self.n}")
        indptr, indices = self.csr()
        return tuple(int(v) + 1 for v in indices[indptr[i - 1]:indptr[i]])

    def has_edge(self, i: int, j: int) -> bool:
        if i == j:
            return False
        key = (min(i, j), max(i, j))
        return key in self.edges()

    def is_subgraph_of(self, other: "Graph") -> bool:
        return self.n == other.n and self.edges() <= other.edges()

    def to_text(self) -> str:
        """Edge-list format: first line "n m", then "u v" per edge, u < v."""
        lines = [f"{self.n} {self.m}"]
        lines.extend(f"{u} {v}" for u, v in self.edge_array.tolist())
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Graph":
        lines = text.splitlines()
        if not lines:
            raise GraphFormatError("empty input, expected header 'n m'", 1)
        head = lines[0].split()
        if len(head) != 2 or not all(t.lstrip("-").isdigit() for t in head):
            raise GraphFormatError("expected header 'n m'", 1)
        n, m = int(head[0]), int(head[1])
        if n < 1 or m < 0:
            raise GraphFormatError("need n >= 1 and m >= 0", 1)
        edges = []
        for ln, raw in enumerate(lines[1:], start=2):
            if not raw.strip():
                continue
            parts = raw.split()
            if len(parts) != 2 or not all(t.lstrip("-").isdigit() for t in parts):
                raise GraphFormatError("expected edge 'u v'", ln)
            u, v = int(parts[0]), int(parts[1])
            if not (1 <= u < v <= n):
                raise GraphFormatError(f"edge ({u}, {v}) violates 1 <= u < v <= n", ln)
            edges.append((u, v))
        if len(edges) != m:
            raise GraphFormatError(f"header promised {m} edges, found {len(edges)}", 1)
        g = cls.from_edges(n, edges)
        if g.m != len(edges):
            raise GraphFormatError("duplicate edges in input", 1)
        return g


@dataclass(frozen=True)
class PairingTable:
    """Per-node random selections: node i picked the K ids in row i-1."""

    n: int
    K: int
    picks: np.ndarray = field(repr=False)  # (n, K) int64, 1-based ids

    def __post_init__(self):
        _check_nK(self.n, self.K)
        if self.picks.shape != (self.n, self.K):
            raise ValueError("picks must have shape (n, K)")

    def gamma(self, i: int) -> frozenset[int]:
        """The K-subset selected by node i."""
        if not 1 <= i <= self.n:
            raise ValueError(f"node {i} out of range 1..{self.n}")
        return frozenset(self.picks[i - 1].tolist())

    @property
    def gamma_sets(self) -> list[frozenset[int]]:
        return [self.gamma(i) for i in range(1, self.n + 1)]

    def __eq__(self, other):
        if not isinstance(other, PairingTable):
            return NotImplemented
        return (
            self.n == other.n
            and self.K == other.K
            and np.array_equal(np.sort(self.picks, axis=1), np.sort(other.picks, axis=1))
        )

    def __hash__(self):
        return hash((self.n, self.K, np.sort(self.picks, axis=1).tobytes()))


def _check_nK(n: int, K: int) -> None:
    if n < 2:
        raise ValueError(f"need n >= 2, got n={n}")
    if not 1 <= K <= n - 1:
        raise ValueError(f"need 1 <= K <= n-1 = {n - 1}, got K={K}")


def _check_p(p: float) -> None:
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"need 0 <= p <= 1, got p={p}")


def _draw_selection_ints(n: int, K: int, rng: np.random.Generator) -> np.ndarray:
    """The (K, n) swap targets driving partial Fisher-Yates, one column per node."""
    r = np.empty((K, n), dtype=np.int64)
    for t in range(K):
        r[t] = rng.integers(t, n - 1, size=n)
    return r


def sample_pairing(n: int, K: int, seed: SeedSpec) -> PairingTable:
    """Each node independently selects a uniform K-subset of the other nodes."""
    _check_nK(n, K)
    r = _draw_selection_ints(n, K, seed.rng())
    return PairingTable(n, K, kernels.sample_picks(n, K, r))


def kout_graph(pairing: PairingTable) -> Graph:
    """Undirected graph with edge {i, j} iff i selected j or j selected i."""
    n, K = pairing.n, pairing.K
    src = np.repeat(np.arange(1, n + 1, dtype=np.int64), K)
    dst = pairing.picks.ravel()
    pairs = np.stack([np.minimum(src, dst), np.maximum(src, dst)], axis=1)
    pairs = np.unique(pairs, axis=0)
    return Graph(n, pairs)


def _pair_index_to_edges(n: int, idx: np.ndarray) -> np.ndarray:
    """Map linear upper-triangle indices (row-major) to 1-based (u, v) pairs."""
    # idx of 0-based (u, v), u < v: u*(2n-u-1)/2 + (v-u-1)
    nd = n
    u = np.floor(
        ((2 * nd - 1) - np.sqrt((2 * nd - 1) ** 2 - 8.0 * idx)) / 2.0
    ).astype(np.int64)
    # guard float rounding at block boundaries
    base = u * (2 * nd - u - 1) // 2
    u[base > idx] -= 1
    u[(u + 1) * (2 * nd - u - 2) // 2 <= idx] += 1
    base = u * (2 * nd - u - 1) // 2
    v = idx - base + u + 1
    return np.stack([u + 1, v + 1], axis=1)


def er_graph(n: int, p: float, seed: SeedSpec) -> Graph:
    """Erdos-Renyi graph: each of the C(n, 2) edges present independently w.p. p."""
    if n < 1:
        raise ValueError("n must be >= 1")
    _check_p(p)
    total = n * (n - 1) // 2
    if p == 0.0 or total == 0:
        return Graph(n, np.empty((0, 2), dtype=np.int64))
    rng = seed.rng()
    kept = []
    for start in range(0, total, _ER_CHUNK):
        stop = min(start + _ER_CHUNK, total)
        mask = rng.random(stop - start) < p
        kept.append(np.nonzero(mask)[0] + start)
    idx = np.concatenate(kept)
    return Graph(n, _pair_index_to_edges(n, idx))


def intersect(g: Graph, h: Graph) -> Graph:
    """Edge-set intersection of two graphs on the same vertex set."""
    if g.n != h.n:
        raise ValueError(f"vertex-count mismatch: {g.n} != {h.n}")
    return Graph.from_edges(g.n, g.edges() & h.edges())


def _thin_edges(g: Graph, p: float, rng: np.random.Generator) -> Graph:
    """Keep each edge independently with probability p (edges in canonical order)."""
    if p == 1.0:
        return g
    keep = rng.random(g.m) < p
    return Graph(g.n, g.edge_array[keep])


def sample_intersection(n: int, K: int, p: float, seed: SeedSpec) -> Graph:
    """One draw of the K-out/ER intersection graph.

    Realized by thinning the K-out edges with independent Bernoulli(p)
    channels, which has the same law as intersecting with a full ER graph;
    pairing and channel randomness come from separate sub-streams.
    """
    _check_nK(n, K)
    _check_p(p)
    pairing = sample_pairing(n, K, seed.child("pairing"))
    kout = kout_graph(pairing)
    return _thin_edges(kout, p, seed.child("channel").rng())


def nested_er(n: int, p: float, p_big: float, seed: SeedSpec) -> tuple[Graph, Graph]:
    """Coupled ER pair (G_small, G_big) with G_small a subgraph of G_big.

    G_big is ER(n; p_big); G_small is G_big intersected with an independent
    ER(n; p/p_big), hence marginally ER(n; p). Convention: p/p_big = 1 when
    p_big = 0 (both graphs empty).
    """
    _check_p(p)
    _check_p(p_big)
    if p > p_big:
        raise ValueError(f"need p <= p_big, got {p} > {p_big}")
    g_big = er_graph(n, p_big, seed.child("big"))
    ratio = 1.0 if p_big == 0.0 else p / p_big
    thinner = er_graph(n, ratio, seed.child("thin"))
    return intersect(g_big, thinner), g_big


def nested_kout(
    n: int, K: int, K_big: int, seed: SeedSpec
) -> tuple[PairingTable, PairingTable]:
    """Coupled pairing pair: the K_big-table extends the K-table row by row.

    Round one draws each node's K selections; round two continues the same
    Fisher-Yates pass for K_big - K more picks from the unpicked remainder,
    so the extended table is marginally a uniform K_big-selection.
    """
    _check_nK(n, K)
    _check_nK(n, K_big)
    if K > K_big:
        raise ValueError(f"need K <= K_big, got {K} > {K_big}")
    r = _draw_selection_ints(n, K_big, seed.rng())
    picks_big = kernels.sample_picks(n, K_big, r)
    big = PairingTable(n, K_big, picks_big)
    small = PairingTable(n, K, picks_big[:, :K].copy())
    return small, big


def kout_edge_prob(n: int, K: int) -> float:
    """Probability that a given pair is adjacent in the K-out graph."""
    _check_nK(n, K)
    q = K / (n - 1)
    return 2.0 * q - q * q


def intersection_edge_prob(n: int, K: int, p: float) -> float:
    """Edge probability of the intersection graph: p times the K-out value."""
    _check_p(p)
    return p * kout_edge_prob(n, K)
