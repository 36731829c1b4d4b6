"""Command-line interface.

Commands: threshold, sweep, degree-dist, sample, analyze.
Exit codes: 0 success, 2 flag/domain error, 3 I/O error, 4 graph parse error.
"""

from __future__ import annotations

import argparse
import sys

from .analysis import degree_report, vertex_connectivity
from .graphs import Graph, GraphFormatError, sample_intersection
from .montecarlo import sweep
from .seeds import SeedSpec
from .thresholds import (
    ModelParams,
    critical_K,
    degree_pmf_asymptotic,
    degree_pmf_exact,
    er_threshold_p,
    scaling_deviation,
)

EXIT_OK = 0
EXIT_FLAG = 2
EXIT_IO = 3
EXIT_PARSE = 4


def _int_range(text: str) -> list[int]:
    """Parse "lo..hi[:step]" (inclusive) or a single integer."""
    step = 1
    if ":" in text:
        text, step_s = text.split(":", 1)
        step = int(step_s)
    if ".." in text:
        lo_s, hi_s = text.split("..", 1)
        lo, hi = int(lo_s), int(hi_s)
    else:
        lo = hi = int(text)
    if step < 1:
        raise ValueError("step must be >= 1")
    return list(range(lo, hi + 1, step))


def _float_range(text: str) -> list[float]:
    """Parse "lo..hi[:step]" (inclusive, default step 0.05) or a single float."""
    step = 0.05
    if ":" in text:
        text, step_s = text.split(":", 1)
        step = float(step_s)
    if ".." in text:
        lo_s, hi_s = text.split("..", 1)
        lo, hi = float(lo_s), float(hi_s)
    else:
        return [float(text)]
    if step <= 0:
        raise ValueError("step must be > 0")
    values = []
    x = lo
    while x <= hi + 1e-12:
        values.append(round(x, 10))
        x += step
    return values


def _write_output(text: str, out_path: str | None) -> None:
    if out_path is None or out_path == "-":
        sys.stdout.write(text)
    else:
        with open(out_path, "w") as fh:
            fh.write(text)


def _cmd_threshold(args) -> int:
    if not 0.0 < args.p < 1.0:
        print("error: p must be < 1 (and > 0)", file=sys.stderr)
        return EXIT_FLAG
    Kc = critical_K(args.n, args.p, args.k)
    lines = []
    if Kc is None:
        lines.append(f"critical_K=none (no K <= {args.n - 1} crosses the threshold)")
    else:
        lines.append(f"critical_K={Kc}")
        dev_at = scaling_deviation(ModelParams(args.n, Kc, args.p, args.k))
        lines.append(f"deviation_at_critical={dev_at:.6g}")
        if Kc > 1:
            dev_below = scaling_deviation(ModelParams(args.n, Kc - 1, args.p, args.k))
            lines.append(f"deviation_below_critical={dev_below:.6g}")
    lines.append(f"er_threshold_p={er_threshold_p(args.n, args.k, 0.0):.6g}")
    _write_output("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _cmd_sweep(args) -> int:
    K_values = _int_range(args.K)
    p_values = _float_range(args.p)
    if not K_values or not p_values:
        print("error: empty axis", file=sys.stderr)
        return EXIT_FLAG
    table = sweep(
        args.n,
        K_values,
        p_values,
        [args.k],
        args.trials,
        args.seed,
        threads=args.threads,
    )
    text = table.to_csv() if args.format == "csv" else table.to_json()
    _write_output(text, args.out)
    transition = table.transition_point(args.k, "K" if len(K_values) > 1 else "p")
    if transition is not None:
        print(f"transition at {transition} (first point with p_min_degree > 0.5)", file=sys.stderr)
    return EXIT_OK


def _cmd_degree_dist(args) -> int:
    pmf = degree_pmf_exact(args.n, args.K, args.p, args.ell_max)
    lines = ["ell,exact,asymptotic,expected_count"]
    for ell, prob in enumerate(pmf.probs):
        if 0.0 < args.p < 1.0:
            asym = format(degree_pmf_asymptotic(args.n, args.K, args.p, ell), ".8g")
        else:
            asym = ""
        lines.append(f"{ell},{prob:.8g},{asym},{args.n * prob:.8g}")
    _write_output("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _cmd_sample(args) -> int:
    g = sample_intersection(args.n, args.K, args.p, SeedSpec(args.seed, "sample"))
    _write_output(g.to_text(), args.out)
    return EXIT_OK


def _cmd_analyze(args) -> int:
    try:
        with open(args.graph) as fh:
            text = fh.read()
    except OSError as exc:
        print(f"error: cannot read {args.graph}: {exc}", file=sys.stderr)
        return EXIT_IO
    g = Graph.from_text(text)
    report = degree_report(g)
    kappa = vertex_connectivity(g)
    hist = " ".join(f"{d}:{c}" for d, c in sorted(report.histogram.items()))
    _write_output(
        f"min_degree={report.min_degree} vertex_connectivity={kappa}\n"
        f"degree_histogram={hist}\n",
        args.out,
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="keygraph",
        description="K-out/ER intersection graphs: thresholds, sampling, sweeps",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p_, seed=True):
        p_.add_argument("--out", default=None, help="output path (default stdout)")
        if seed:
            p_.add_argument("--seed", type=int, default=0, help="master seed (u64)")

    p_thr = sub.add_parser("threshold", help="critical K and ER comparison point")
    p_thr.add_argument("--n", type=int, default=2000)
    p_thr.add_argument("--p", type=float, required=True)
    p_thr.add_argument("--k", type=int, default=1)
    common(p_thr, seed=False)
    p_thr.set_defaults(func=_cmd_threshold)

    p_sw = sub.add_parser("sweep", help="Monte Carlo sweep over K or p")
    p_sw.add_argument("--n", type=int, default=2000)
    p_sw.add_argument("--K", required=True, help="int or range lo..hi[:step]")
    p_sw.add_argument("--p", required=True, help="float or range lo..hi[:step]")
    p_sw.add_argument("--k", type=int, default=1)
    p_sw.add_argument("--trials", type=int, default=200)
    p_sw.add_argument("--threads", type=int, default=1)
    p_sw.add_argument("--format", choices=["csv", "json"], default="csv")
    common(p_sw)
    p_sw.set_defaults(func=_cmd_sweep)

    p_dd = sub.add_parser("degree-dist", help="exact and asymptotic degree pmf")
    p_dd.add_argument("--n", type=int, default=2000)
    p_dd.add_argument("--K", type=int, required=True)
    p_dd.add_argument("--p", type=float, required=True)
    p_dd.add_argument("--ell-max", type=int, default=None, dest="ell_max")
    common(p_dd, seed=False)
    p_dd.set_defaults(func=_cmd_degree_dist)

    p_sa = sub.add_parser("sample", help="write one intersection-graph draw")
    p_sa.add_argument("--n", type=int, default=2000)
    p_sa.add_argument("--K", type=int, required=True)
    p_sa.add_argument("--p", type=float, required=True)
    common(p_sa)
    p_sa.set_defaults(func=_cmd_sample)

    p_an = sub.add_parser("analyze", help="degree/connectivity report for a graph file")
    p_an.add_argument("graph", help="edge-list file ('n m' header)")
    common(p_an, seed=False)
    p_an.set_defaults(func=_cmd_analyze)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GraphFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FLAG
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
