#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Times the hot loops (geometric division chains, Cauchy products, weighted
recurrence convolutions, the rank DP) plus one end-to-end table build per
backend, and prints a speedup table.

Usage:
    python benchmarks/bench_kernels.py [--order 2000] [--dp-n 300] [--repeat 3]
"""

from __future__ import annotations

import argparse
import time

from crankq import _kernels_py

try:
    from crankq import _kernels_cy
except ImportError:
    _kernels_cy = None


def best_of(repeat, fn, *args):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_geom_chain(kernels, order):
    c = [1] + [0] * order
    for j in range(1, 64):
        kernels.geom_divide(c, j)


def bench_cauchy(kernels, order):
    a = list(range(1, order + 2))
    b = list(range(order + 1, 0, -1))
    kernels.cauchy_mul(a, b, order + 1)


def bench_weighted_conv(kernels, order):
    cur = [1] + [0] * order
    for k in range(1, 7):
        cur = kernels.weighted_conv(cur, k, 0, 0)


def bench_rank_dp(kernels, n):
    kernels.rank_dp(n)


def bench_crank_table(env_value, n):
    # spawn-free: flip the backend by reimporting the statistics stack
    import importlib
    import os

    import crankq._backend
    import crankq.enumeration
    import crankq.families
    import crankq.series
    import crankq.statistics

    old = os.environ.get("CRANKQ_PURE_PYTHON")
    if env_value:
        os.environ["CRANKQ_PURE_PYTHON"] = "1"
    else:
        os.environ.pop("CRANKQ_PURE_PYTHON", None)
    try:
        importlib.reload(crankq._backend)
        importlib.reload(crankq.series)
        importlib.reload(crankq.enumeration)
        importlib.reload(crankq.families)
        importlib.reload(crankq.statistics)
        t0 = time.perf_counter()
        crankq.statistics.crank_table(n)
        return time.perf_counter() - t0
    finally:
        if old is None:
            os.environ.pop("CRANKQ_PURE_PYTHON", None)
        else:
            os.environ["CRANKQ_PURE_PYTHON"] = old


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--order", type=int, default=2000)
    parser.add_argument("--dp-n", type=int, default=300)
    parser.add_argument("--table-n", type=int, default=300)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if _kernels_cy is None:
        print("compiled kernels are not available; nothing to compare")
        return 1

    rows = []
    cases = [
        ("geom divide chain (order %d)" % args.order, bench_geom_chain, args.order),
        ("cauchy mul (order %d)" % args.order, bench_cauchy, args.order),
        ("weighted conv k<=6 (order %d)" % args.order, bench_weighted_conv,
         args.order),
        ("rank DP (n = %d)" % args.dp_n, bench_rank_dp, args.dp_n),
    ]
    for name, fn, arg in cases:
        t_py = best_of(args.repeat, fn, _kernels_py, arg)
        t_cy = best_of(args.repeat, fn, _kernels_cy, arg)
        rows.append((name, t_py, t_cy))

    t_py = bench_crank_table(True, args.table_n)
    t_cy = bench_crank_table(False, args.table_n)
    rows.append(("crank table end to end (n = %d)" % args.table_n, t_py, t_cy))

    width = max(len(r[0]) for r in rows)
    print(f"{'case':<{width}}  {'python':>10}  {'cython':>10}  {'speedup':>8}")
    for name, t_py, t_cy in rows:
        speed = t_py / t_cy if t_cy > 0 else float("inf")
        print(f"{name:<{width}}  {t_py:>9.4f}s  {t_cy:>9.4f}s  {speed:>7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
