"""Compare the compiled kernels against the pure-Python fallback.

Usage: python benchmarks/bench_kernels.py [--n 2000] [--K 20] [--repeat 20]

Also cross-checks that both backends return identical results on the
benchmark inputs.
"""

import argparse
import time

import numpy as np

from keygraph import _kernels_py
from keygraph.graphs import _draw_selection_ints, kout_graph, sample_pairing
from keygraph.seeds import SeedSpec

try:
    from keygraph import _kernels
except ImportError:
    _kernels = None


def bench(label, fn, repeat):
    best = min(_time_once(fn) for _ in range(repeat))
    print(f"  {label:<10} {best * 1e3:9.3f} ms")
    return best


def _time_once(fn):
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=2000)
    ap.add_argument("--K", type=int, default=20)
    ap.add_argument("--repeat", type=int, default=20)
    args = ap.parse_args()
    n, K = args.n, args.K

    if _kernels is None:
        print("compiled backend not available; showing pure Python only")

    r = _draw_selection_ints(n, K, SeedSpec(0, "bench").rng())
    print(f"sample_picks (n={n}, K={K}):")
    t_py = bench("python", lambda: _kernels_py.sample_picks(n, K, r), args.repeat)
    if _kernels is not None:
        t_cy = bench("cython", lambda: _kernels.sample_picks(n, K, r), args.repeat)
        assert np.array_equal(_kernels.sample_picks(n, K, r), _kernels_py.sample_picks(n, K, r))
        print(f"  speedup    {t_py / t_cy:9.1f}x")

    g = kout_graph(sample_pairing(n, K, SeedSpec(0, "bench-graph")))
    indptr, indices = g.csr()
    print(f"has_articulation (n={n}, m={g.m}):")
    t_py = bench("python", lambda: _kernels_py.has_articulation(n, indptr, indices), args.repeat)
    if _kernels is not None:
        t_cy = bench("cython", lambda: _kernels.has_articulation(n, indptr, indices), args.repeat)
        assert _kernels.has_articulation(n, indptr, indices) == _kernels_py.has_articulation(
            n, indptr, indices
        )
        print(f"  speedup    {t_py / t_cy:9.1f}x")

    print(f"connected (n={n}, m={g.m}):")
    t_py = bench("python", lambda: _kernels_py.connected(n, indptr, indices), args.repeat)
    if _kernels is not None:
        t_cy = bench("cython", lambda: _kernels.connected(n, indptr, indices), args.repeat)
        print(f"  speedup    {t_py / t_cy:9.1f}x")


if __name__ == "__main__":
    main()
