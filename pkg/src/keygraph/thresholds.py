"""Closed-form analytics for the intersection model.

The scaling deviation measures how far (K, p) sits from the minimum-degree
threshold: positive deviation puts the model in the "all degrees >= k"
regime, negative in the failing regime. Degree distributions come from the
law d = Bin(K, p) + Bin(n - K - 1, pK/(n-1)); all logs are natural.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln

__all__ = [
    "ModelParams",
    "DegreePmf",
    "scaling_deviation",
    "scaling_deviation_normalized",
    "critical_K",
    "er_threshold_p",
    "degree_pmf_exact",
    "degree_pmf_asymptotic",
    "expected_degree_count",
]


@dataclass(frozen=True)
class ModelParams:
    """Model point: n nodes, K selections each, channel-on probability p,
    target connectivity strength k."""

    n: int
    K: int
    p: float
    k: int = 1

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"need n >= 2, got n={self.n}")
        if not 1 <= self.K <= self.n - 1:
            raise ValueError(f"need 1 <= K <= n-1, got K={self.K}")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"need 0 <= p <= 1, got p={self.p}")
        if self.k < 1:
            raise ValueError(f"need k >= 1, got k={self.k}")
        if self.k >= 2 and self.n < 3:
            raise ValueError("k >= 2 requires n >= 3 (log log n must be positive)")


@dataclass(frozen=True)
class DegreePmf:
    n: int
    K: int
    p: float
    probs: np.ndarray  # probs[ell] = P[degree = ell], ell = 0..ell_max


def _log_threshold(n: int, k: int) -> float:
    if k >= 2 and n < 3:
        raise ValueError("k >= 2 requires n >= 3")
    return math.log(n) + (k - 1) * math.log(math.log(n))


def _scaling_lhs(n: int, K: float, p: float) -> float:
    """p*K*(1 - log(1-p)/p - K/(n-1)); continuous limit 0 at p = 0."""
    if p == 0.0:
        return 0.0
    return p * K * (1.0 - math.log1p(-p) / p - K / (n - 1))


def scaling_deviation(params: ModelParams) -> float:
    """Slack of (K, p) against the minimum-degree threshold at strength k."""
    if params.p >= 1.0:
        raise ValueError("p must be < 1 (log(1-p) diverges)")
    return _scaling_lhs(params.n, params.K, params.p) - _log_threshold(params.n, params.k)


def scaling_deviation_normalized(params: ModelParams) -> float:
    """Deviation in the edge-probability normalization: the left side is
    n times the intersection edge probability's leading expression."""
    if params.p >= 1.0:
        raise ValueError("p must be < 1 (log(1-p) diverges)")
    n = params.n
    lhs = _scaling_lhs(n, params.K, params.p) * n / (n - 1)
    return lhs - _log_threshold(n, params.k)


def critical_K(n: int, p: float, k: int = 1) -> int | None:
    """Smallest K with positive scaling deviation, or None if even K = n-1 fails.

    Binary search, valid because the left side is nondecreasing in K.
    """
    if not 0.0 < p < 1.0:
        raise ValueError(f"need 0 < p < 1, got p={p}")
    target = _log_threshold(n, k)
    if _scaling_lhs(n, n - 1, p) <= target:
        return None
    lo, hi = 1, n - 1  # invariant: lhs(hi) > target
    while lo < hi:
        mid = (lo + hi) // 2
        if _scaling_lhs(n, mid, p) > target:
            hi = mid
        else:
            lo = mid + 1
    return lo


def er_threshold_p(n: int, k: int, gamma_target: float) -> float:
    """ER edge probability with the same threshold deviation: (log n +
    (k-1) log log n + gamma) / n; must land in [0, 1]."""
    value = (_log_threshold(n, k) + gamma_target) / n
    if not 0.0 <= value <= 1.0:
        raise ValueError(f"threshold probability {value} outside [0, 1]")
    return value


def _binom_logpmf(m: int, j: np.ndarray, r: float) -> np.ndarray:
    """log Bin(m, r) pmf at j (array); -inf outside support."""
    j = np.asarray(j, dtype=np.int64)
    out = np.full(j.shape, -np.inf)
    ok = (j >= 0) & (j <= m)
    if r == 0.0:
        out[ok & (j == 0)] = 0.0
        return out
    if r == 1.0:
        out[ok & (j == m)] = 0.0
        return out
    jj = j[ok]
    out[ok] = (
        gammaln(m + 1)
        - gammaln(jj + 1)
        - gammaln(m - jj + 1)
        + jj * math.log(r)
        + (m - jj) * math.log1p(-r)
    )
    return out


def _degree_prob(n: int, K: int, p: float, ell: int) -> float:
    """P[degree = ell]: double-binomial sum over the split ell = i + (ell - i)."""
    i = np.arange(0, ell + 1)
    q = p * K / (n - 1)
    log_in = _binom_logpmf(n - K - 1, i, q)  # incoming-selection part
    log_out = _binom_logpmf(K, ell - i, p)  # own-selection part
    terms = log_in + log_out
    finite = terms[np.isfinite(terms)]
    if finite.size == 0:
        return 0.0
    top = finite.max()
    return float(math.exp(top) * np.exp(finite - top).sum())


def degree_pmf_exact(n: int, K: int, p: float, ell_max: int | None = None) -> DegreePmf:
    """Exact degree pmf of a node in the intersection graph, ell = 0..ell_max.

    Terms are evaluated through log-gamma and summed after exponentiation
    against the largest term, keeping absolute error well under 1e-12.
    """
    ModelParams(n, K, p)
    if ell_max is None:
        ell_max = n - 1
    if not 0 <= ell_max <= n - 1:
        raise ValueError(f"need 0 <= ell_max <= n-1, got {ell_max}")
    probs = np.array([_degree_prob(n, K, p, ell) for ell in range(ell_max + 1)])
    return DegreePmf(n, K, p, probs)


def degree_pmf_asymptotic(n: int, K: int, p: float, ell: int) -> float:
    """Large-n approximation of P[degree = ell] (the vanishing-correction form)."""
    ModelParams(n, K, p)
    if not 0.0 < p < 1.0:
        raise ValueError(f"asymptotic pmf needs 0 < p < 1, got p={p}")
    if ell < 0:
        raise ValueError("ell must be >= 0")
    q = p * K / (n - 1)
    log_value = (
        (ell * math.log(p * K) if ell > 0 else 0.0)
        - gammaln(ell + 1)
        + K * math.log1p(-p)
        + (n - K - 1) * math.log1p(-q)
        + ell * math.log(1.0 - K / (n - 1) + 1.0 / (1.0 - p))
    )
    return float(math.exp(log_value))


def expected_degree_count(n: int, K: int, p: float, ell: int) -> float:
    """Expected number of degree-ell nodes: n * P[degree = ell]."""
    ModelParams(n, K, p)
    if not 0 <= ell <= n - 1:
        raise ValueError(f"need 0 <= ell <= n-1, got {ell}")
    return n * _degree_prob(n, K, p, ell)
