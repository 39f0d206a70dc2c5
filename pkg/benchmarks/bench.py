#!/usr/bin/env python3
"""Scaling sweep and backend comparison for the graph checker.

Usage: python benchmarks/bench.py [--ns 10,20,40,80] [--g 2] [--seed 0]
           [--family random|chain|both] [--backend NAME] [--repeats 3]
           [--compare-n 32]

Prints one table row per size plus fitted log-log exponents.  The exponent
thresholds (memory 3.3, time 4.5) are informational: exceeding one flags the
row for review, it does not fail anything.
"""

import argparse
import sys

from lttcheck import available_backends
from lttcheck.benchmark import compare_backends, fit_exponent, run_sweep

MEM_EXPONENT_LIMIT = 3.3
TIME_EXPONENT_LIMIT = 4.5


def sweep(family: str, args) -> None:
    rows = run_sweep(
        tuple(args.ns), args.g, args.seed, args.backend, family, args.repeats
    )
    print(f"family={family} g={args.g} seed={args.seed} backend={args.backend or 'auto'}")
    print(f"{'n':>6} {'seconds':>12} {'peak_bytes':>12} {'ltt':>4}")
    for r in rows:
        print(f"{r.n:>6} {r.seconds:>12.6f} {r.peak_bytes:>12} {int(r.is_ltt):>4}")
    ns = [r.n for r in rows]
    t_exp = fit_exponent(ns, [r.seconds for r in rows])
    m_exp = fit_exponent(ns, [r.peak_bytes for r in rows])
    t_flag = "ok" if t_exp <= TIME_EXPONENT_LIMIT else "REVIEW"
    m_flag = "ok" if m_exp <= MEM_EXPONENT_LIMIT else "REVIEW"
    print(f"time exponent   {t_exp:6.3f}  (informational limit {TIME_EXPONENT_LIMIT}: {t_flag})")
    print(f"memory exponent {m_exp:6.3f}  (informational limit {MEM_EXPONENT_LIMIT}: {m_flag})")
    print()


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--ns", type=int, nargs="+", default=[10, 20, 40, 80])
    parser.add_argument("--g", type=int, default=2)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--family", choices=("random", "chain", "both"), default="both")
    parser.add_argument("--backend", choices=available_backends(), default=None)
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--compare-n", type=int, default=32)
    args = parser.parse_args()

    families = ("random", "chain") if args.family == "both" else (args.family,)
    for family in families:
        sweep(family, args)

    if len(available_backends()) > 1:
        times = compare_backends(args.compare_n, args.g, args.repeats)
        print(f"backend comparison on the chain family, n={args.compare_n}:")
        for name, secs in times.items():
            print(f"  {name:>9}: {secs:.6f} s")
        if "python" in times and "compiled" in times and times["compiled"] > 0:
            print(f"  speedup: {times['python'] / times['compiled']:.1f}x")
    else:
        print("only one backend available; skipping comparison")
    return 0


if __name__ == "__main__":
    sys.exit(main())
