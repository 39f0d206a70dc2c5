"""Scaling sweeps and backend comparison for the graph checker."""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .automaton import CompleteAutomaton, complete_automaton
from .checker import check_ltt_detailed
from .generate import XorShift64Star, random_complete_automaton

__all__ = [
    "chain_automaton",
    "BenchRow",
    "run_sweep",
    "fit_exponent",
    "compare_backends",
]


def chain_automaton(n: int) -> CompleteAutomaton:
    """One letter walks 0,1,...,n-1 and parks at the end; one letter stays put.

    Passes every graph condition, so it exercises the full pipeline including
    the n^3 table; the language only counts advancing letters up to n-1.
    """
    rows = tuple((min(i + 1, n - 1), i) for i in range(n))
    return complete_automaton(rows)


@dataclass(frozen=True)
class BenchRow:
    family: str
    n: int
    g: int
    seconds: float
    peak_bytes: int
    is_ltt: bool


def _measure(a: CompleteAutomaton, backend: str | None, repeats: int) -> BenchRow:
    best = float("inf")
    run = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        run = check_ltt_detailed(a, backend)
        best = min(best, time.perf_counter() - t0)
    peak = sum(run.peaks.values())
    return BenchRow("", a.n_states, a.n_labels, best, peak, run.verdict.is_ltt)


def run_sweep(
    ns: tuple[int, ...] = (10, 20, 40, 80),
    g: int = 2,
    seed: int = 0,
    backend: str | None = None,
    family: str = "random",
    repeats: int = 3,
) -> list[BenchRow]:
    """One row per n; random rows report the median automaton of `repeats` draws."""
    rows = []
    rng = XorShift64Star(seed)
    for n in ns:
        if family == "chain":
            row = _measure(chain_automaton(n), backend, repeats)
        elif family == "random":
            samples = [
                _measure(random_complete_automaton(n, g, rng), backend, 1)
                for _ in range(repeats)
            ]
            samples.sort(key=lambda r: r.seconds)
            row = samples[len(samples) // 2]
        else:
            raise ValueError(f"unknown family {family!r}")
        rows.append(BenchRow(family, row.n, row.g, row.seconds, row.peak_bytes, row.is_ltt))
    return rows


def fit_exponent(ns, values) -> float:
    """Least-squares slope of log(value) against log(n)."""
    xs = np.log(np.asarray(ns, dtype=float))
    ys = np.log(np.maximum(np.asarray(values, dtype=float), 1e-9))
    return float(np.polyfit(xs, ys, 1)[0])


def compare_backends(
    n: int = 32, g: int = 2, repeats: int = 3
) -> dict[str, float]:
    """Best-of-`repeats` full-pipeline seconds per available backend."""
    a = chain_automaton(n)
    out = {}
    for name in _kernels.available_backends():
        out[name] = _measure(a, name, repeats).seconds
    return out
