"""Seeded Monte Carlo estimation of minimum-degree and k-connectivity probabilities.

Trials are the unit of parallel work. Each trial's seed depends only on
(master_seed, stream label, trial index), and aggregation is integer
counting, so estimates are identical for any worker count or execution
order.
"""

from __future__ import annotations

import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .analysis import is_k_connected
from .graphs import intersect, kout_graph, nested_er, nested_kout, sample_intersection
from .seeds import SeedSpec
from .thresholds import ModelParams

__all__ = [
    "TrialOutcome",
    "SweepRow",
    "SweepTable",
    "run_trial",
    "estimate",
    "sweep",
    "coupling_audit",
    "CSV_HEADER",
]

CSV_HEADER = "n,K,p,k,trials,p_min_degree,p_kconn,se_min_degree,se_kconn,seed"


@dataclass(frozen=True)
class TrialOutcome:
    trial_index: int
    min_degree: int
    min_deg_flags: dict[int, bool]  # k -> min degree >= k
    kconn_flags: dict[int, bool]  # k -> k-connected

    def __post_init__(self):
        for k, conn in self.kconn_flags.items():
            if conn and not self.min_deg_flags[k]:
                raise AssertionError(f"k-connected sample with min degree < {k}")


@dataclass(frozen=True)
class SweepRow:
    n: int
    K: int
    p: float
    k: int
    trials: int
    p_min_degree: float
    p_kconn: float
    se_min_degree: float
    se_kconn: float
    seed: int


def run_trial(params: ModelParams, ks: list[int], trial_seed: SeedSpec) -> TrialOutcome:
    """Sample one intersection graph and evaluate both properties per k."""
    g = sample_intersection(params.n, params.K, params.p, trial_seed)
    min_deg = int(g.degrees().min())
    min_deg_flags = {k: min_deg >= k for k in ks}
    kconn_flags = {
        k: bool(min_deg_flags[k] and is_k_connected(g, k)) for k in ks
    }
    return TrialOutcome(trial_seed.index, min_deg, min_deg_flags, kconn_flags)


def _trial_counts(args) -> tuple[np.ndarray, np.ndarray]:
    """Count (min-degree, k-connected) successes for a contiguous index block."""
    params, ks, master_seed, label, start, stop = args
    deg = np.zeros(len(ks), dtype=np.int64)
    conn = np.zeros(len(ks), dtype=np.int64)
    for idx in range(start, stop):
        outcome = run_trial(params, ks, SeedSpec(master_seed, label, idx))
        for pos, k in enumerate(ks):
            deg[pos] += outcome.min_deg_flags[k]
            conn[pos] += outcome.kconn_flags[k]
    return deg, conn


def _binomial_se(p_hat: float, trials: int) -> float:
    return float(np.sqrt(p_hat * (1.0 - p_hat) / trials))


def estimate(
    params: ModelParams,
    ks: list[int],
    trials: int,
    master_seed: int,
    stream_label: str = "trial",
    threads: int = 1,
) -> list[SweepRow]:
    """Empirical probabilities over independent trials, one row per k.

    All ks share the same sampled graphs, so the rows are paired
    (differences between properties are not washed out by sampling noise).
    """
    if trials < 1:
        raise ValueError(f"need trials >= 1, got {trials}")
    if not ks:
        raise ValueError("need at least one k")
    if threads <= 1:
        deg, conn = _trial_counts((params, ks, master_seed, stream_label, 0, trials))
    else:
        bounds = np.linspace(0, trials, threads + 1, dtype=int)
        jobs = [
            (params, ks, master_seed, stream_label, int(a), int(b))
            for a, b in zip(bounds[:-1], bounds[1:])
            if a < b
        ]
        deg = np.zeros(len(ks), dtype=np.int64)
        conn = np.zeros(len(ks), dtype=np.int64)
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for d, c in pool.map(_trial_counts, jobs):
                deg += d
                conn += c
    rows = []
    for pos, k in enumerate(ks):
        p_deg = deg[pos] / trials
        p_conn = conn[pos] / trials
        rows.append(
            SweepRow(
                n=params.n,
                K=params.K,
                p=params.p,
                k=k,
                trials=trials,
                p_min_degree=float(p_deg),
                p_kconn=float(p_conn),
                se_min_degree=_binomial_se(p_deg, trials),
                se_kconn=_binomial_se(p_conn, trials),
                seed=master_seed,
            )
        )
    return rows


def _format_number(x) -> str:
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    # repr is the shortest exact form: >= 6 significant digits and
    # guaranteed to round-trip into an identical table
    return repr(float(x))


@dataclass(frozen=True)
class SweepTable:
    rows: tuple[SweepRow, ...]

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write(CSV_HEADER + "\n")
        for r in self.rows:
            buf.write(
                ",".join(
                    [
                        str(r.n),
                        str(r.K),
                        _format_number(r.p),
                        str(r.k),
                        str(r.trials),
                        _format_number(r.p_min_degree),
                        _format_number(r.p_kconn),
                        _format_number(r.se_min_degree),
                        _format_number(r.se_kconn),
                        str(r.seed),
                    ]
                )
                + "\n"
            )
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps([r.__dict__ for r in self.rows], indent=2)

    @classmethod
    def from_csv(cls, text: str) -> "SweepTable":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines or lines[0] != CSV_HEADER:
            raise ValueError("unexpected CSV header")
        rows = []
        for ln in lines[1:]:
            f = ln.split(",")
            rows.append(
                SweepRow(
                    n=int(f[0]),
                    K=int(f[1]),
                    p=float(f[2]),
                    k=int(f[3]),
                    trials=int(f[4]),
                    p_min_degree=float(f[5]),
                    p_kconn=float(f[6]),
                    se_min_degree=float(f[7]),
                    se_kconn=float(f[8]),
                    seed=int(f[9]),
                )
            )
        return cls(tuple(rows))

    def transition_point(self, k: int, axis: str = "K") -> float | None:
        """First axis value where the min-degree estimate exceeds 0.5."""
        for r in self.rows:
            if r.k == k and r.p_min_degree > 0.5:
                return getattr(r, axis)
        return None


def sweep(
    n: int,
    K_values: list[int],
    p_values: list[float],
    ks: list[int],
    trials: int,
    master_seed: int,
    threads: int = 1,
) -> SweepTable:
    """Estimate every (K, p) axis point; exactly one of the lists may vary.

    Each point uses a distinct stream label, so trials are fresh per point
    (no common random numbers across the axis).
    """
    if not K_values or not p_values:
        raise ValueError("axis must be nonempty")
    rows: list[SweepRow] = []
    for K in K_values:
        for p in p_values:
            params = ModelParams(n, K, p, max(ks))
            label = f"K={K}/p={p!r}/trial"
            rows.extend(estimate(params, ks, trials, master_seed, label, threads))
    return SweepTable(tuple(rows))


def coupling_audit(
    n: int,
    K: int,
    K_big: int,
    p: float,
    p_big: float,
    trials: int,
    master_seed: int,
) -> bool:
    """Verify the joint construction keeps the small intersection graph
    inside the big one in every trial (and min degree monotone)."""
    if K > K_big or p > p_big:
        raise ValueError("need K <= K_big and p <= p_big")
    for idx in range(trials):
        seed = SeedSpec(master_seed, "couple", idx)
        small_pairs, big_pairs = nested_kout(n, K, K_big, seed.child("kout"))
        er_small, er_big = nested_er(n, p, p_big, seed.child("er"))
        g_small = intersect(kout_graph(small_pairs), er_small)
        g_big = intersect(kout_graph(big_pairs), er_big)
        if not g_small.is_subgraph_of(g_big):
            return False
        if int(g_small.degrees().min()) > int(g_big.degrees().min()):
            return False
    return True
