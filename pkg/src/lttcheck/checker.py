"""Decide local threshold testability of a complete DFA from its transition graph.

The decision runs four conditions over the graph and its pair graph, in fixed
order with an early exit: C1, C2, C3 (well-definedness of a component table
indexed by state triples), a table-consistency precheck L15, and C4.  A failed
condition yields a witness of named states that can be re-validated against
the reachability and cycle-state primitives alone.

Witnesses are deterministic: each condition scans a documented canonical
enumeration order (see `_kernels_py`) and reports the first violation.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .automaton import CompleteAutomaton
from .graphs import (
    ProductGraph,
    ReachabilityTable,
    SccDecomposition,
    cycle_states,
    product_square,
    reachability,
    reachable_from,
    scc,
)

__all__ = [
    "EMPTY",
    "ILL_DEFINED",
    "Verdict",
    "TripleSccTable",
    "GraphArtifacts",
    "GraphCheckRun",
    "build_graph_artifacts",
    "check_condition1",
    "check_condition2",
    "compute_scc_table",
    "check_lemma15",
    "check_condition4",
    "check_ltt",
    "check_ltt_detailed",
    "scc_entry_by_definition",
    "revalidate_witness",
]

EMPTY = -1
ILL_DEFINED = -2

GRAPH_CONDITIONS = ("C1", "C2", "C3", "L15", "C4")

_WITNESS_NAMES = {
    "C1": ("p", "q"),
    "C2": ("p", "s", "q", "t", "r"),
    "C3": ("p", "q", "s", "t1", "t2"),
    "L15": ("p", "q", "r", "q1", "r1", "r2"),
    "C4": ("p", "q", "r", "q1", "r1"),
}


@dataclass(frozen=True)
class Verdict:
    """Outcome of a decider.  ``failed_condition`` and ``witness`` are set iff not LTT."""

    is_ltt: bool
    failed_condition: str | None = None
    witness: dict[str, int] | None = None
    witness_words: dict[str, str] | None = None

    def __post_init__(self):
        if self.is_ltt and (self.failed_condition or self.witness):
            raise ValueError("a passing verdict carries no failure data")
        if not self.is_ltt and self.failed_condition is None:
            raise ValueError("a failing verdict names the violated condition")

    def describe(self) -> str:
        if self.is_ltt:
            return "locally threshold testable"
        parts = [f"not locally threshold testable ({self.failed_condition}"]
        if self.witness:
            parts.append(": " + ", ".join(f"{k}={v}" for k, v in self.witness.items()))
        if self.witness_words:
            parts.append("; words " + "; ".join(f"{k}={v!r}" for k, v in self.witness_words.items()))
        parts.append(")")
        return "".join(parts)


class TripleSccTable:
    """Dense component table over state triples (p, q, s).

    entry(p,q,s) is a component id of the transition graph, EMPTY (-1) when the
    triple has no qualifying auxiliary state r or an empty t-set, or
    ILL_DEFINED (-2) when its t-set meets two different components.
    """

    EMPTY = EMPTY
    ILL_DEFINED = ILL_DEFINED

    def __init__(self, n: int, entries: np.ndarray):
        if entries.shape != (n * n * n,):
            raise ValueError("expected a flat table of n^3 entries")
        self.n = n
        self.entries = entries

    def entry(self, p: int, q: int, s: int) -> int:
        return int(self.entries[(p * self.n + q) * self.n + s])

    def tag(self, p: int, q: int, s: int) -> str:
        e = self.entry(p, q, s)
        if e == EMPTY:
            return "empty"
        if e == ILL_DEFINED:
            return "ill-defined"
        return f"component:{e}"

    def defined_count(self) -> int:
        return int(np.count_nonzero(self.entries >= 0))

    def nbytes(self) -> int:
        return int(self.entries.nbytes)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TripleSccTable)
            and self.n == other.n
            and bool(np.array_equal(self.entries, other.entries))
        )


@dataclass
class GraphArtifacts:
    """Precomputed structures shared by all condition checks."""

    automaton: CompleteAutomaton
    n: int
    g: int
    delta: np.ndarray  # (n, g) int32
    scc: SccDecomposition
    reach_table: ReachabilityTable
    reach: np.ndarray  # (n, n) uint8
    cyc_state: np.ndarray  # (n,) uint8
    product: ProductGraph
    scc2: SccDecomposition
    cyc_pair: np.ndarray  # (n*n,) uint8

    def is_cycle_state(self, p: int) -> bool:
        return bool(self.cyc_state[p])

    def is_cycle_pair(self, p: int, q: int) -> bool:
        return bool(self.cyc_pair[p * self.n + q])


def build_graph_artifacts(
    a: CompleteAutomaton, timings: dict[str, float] | None = None
) -> GraphArtifacts:
    n = a.n_states
    g = a.n_labels
    delta = np.array(a.rows, dtype=np.int32).reshape(n, g)

    t0 = time.perf_counter()
    dec = scc(a)
    product = product_square(a)
    dec2 = scc(product)
    t1 = time.perf_counter()
    rt = reachability(a)
    t2 = time.perf_counter()

    reach = rt.to_matrix()
    cyc_state = np.zeros(n, dtype=np.uint8)
    for v in cycle_states(dec):
        cyc_state[v] = 1
    cyc_pair = np.zeros(n * n, dtype=np.uint8)
    internal = dec2.has_internal_edge
    for v, c in enumerate(dec2.comp_of):
        if internal[c]:
            cyc_pair[v] = 1
    if timings is not None:
        timings["scc"] = t1 - t0
        timings["reachability"] = t2 - t1
    return GraphArtifacts(
        a, n, g, delta, dec, rt, reach, cyc_state, product, dec2, cyc_pair
    )


def check_condition1(art: GraphArtifacts) -> tuple[int, int] | None:
    """Distinct mutually reachable states must not form a cycle pair."""
    n = art.n
    comp = art.scc.comp_of
    cyc = art.cyc_pair
    for p in range(n):
        for q in range(n):
            if p != q and cyc[p * n + q] and comp[p] == comp[q]:
                return (p, q)
    return None


def check_condition2(art: GraphArtifacts, backend: str | None = None):
    """Pairs (q,t) reached from a cycle pair (p,s) must satisfy q >= t whenever
    some r with p >= r >= s makes (r,t) a cycle pair."""
    kern = _kernels.get_backend(backend)
    return kern.condition2(art.n, art.g, art.delta, art.reach, art.cyc_pair)


def compute_scc_table(
    art: GraphArtifacts, backend: str | None = None
) -> tuple[TripleSccTable, tuple | None]:
    """Fill the triple table; the second value is the first ill-defined witness
    (p, q, s, t1, t2) if condition 3 fails, else None."""
    kern = _kernels.get_backend(backend)
    entries, witness = kern.scc_table(
        art.n, art.g, art.delta, art.reach, art.cyc_pair,
        np.asarray(art.scc.comp_of, dtype=np.int32),
    )
    return TripleSccTable(art.n, np.asarray(entries, dtype=np.int32)), witness


def check_lemma15(
    art: GraphArtifacts, table: TripleSccTable, backend: str | None = None
):
    """Entries (p,q,r1) over r1 from the same reached set must agree."""
    kern = _kernels.get_backend(backend)
    return kern.lemma15(
        art.n, art.g, art.delta, art.reach, art.cyc_pair, art.cyc_state, table.entries
    )


def check_condition4(
    art: GraphArtifacts, table: TripleSccTable, backend: str | None = None
):
    """Entries (p,q,r1) and (p,r,q1) must agree for pairs (q1,r1) reached from (q,r)."""
    kern = _kernels.get_backend(backend)
    return kern.condition4(
        art.n, art.g, art.delta, art.reach, art.cyc_pair, art.cyc_state, table.entries
    )


def _fail(condition: str, witness: tuple) -> Verdict:
    names = _WITNESS_NAMES[condition]
    return Verdict(False, condition, dict(zip(names, witness)))


@dataclass
class GraphCheckRun:
    verdict: Verdict
    timings: dict[str, float] = field(default_factory=dict)
    peaks: dict[str, int] = field(default_factory=dict)
    artifacts: GraphArtifacts | None = None
    table: TripleSccTable | None = None


def check_ltt_detailed(a: CompleteAutomaton, backend: str | None = None) -> GraphCheckRun:
    """Run the graph decider with per-phase timings and table size accounting."""
    n = a.n_states
    timings: dict[str, float] = {}
    peaks: dict[str, int] = {
        # dominant dense structures; scratch covers the per-source search arrays
        "reach_bytes": n * n + n * ((n + 7) // 8),
        "pair_graph_bytes": n * n,
        "scratch_bytes": 5 * n * n,
        "table_bytes": 0,
    }
    art = build_graph_artifacts(a, timings)
    run = GraphCheckRun(Verdict(True), timings, peaks, art)

    t0 = time.perf_counter()
    w1 = check_condition1(art)
    timings["c1"] = time.perf_counter() - t0
    if w1 is not None:
        run.verdict = _fail("C1", w1)
        return run

    t0 = time.perf_counter()
    w2 = check_condition2(art, backend)
    timings["c2"] = time.perf_counter() - t0
    if w2 is not None:
        run.verdict = _fail("C2", w2)
        return run

    t0 = time.perf_counter()
    table, w3 = compute_scc_table(art, backend)
    timings["c3"] = time.perf_counter() - t0
    peaks["table_bytes"] = table.nbytes()
    run.table = table
    if w3 is not None:
        run.verdict = _fail("C3", w3)
        return run

    t0 = time.perf_counter()
    w15 = check_lemma15(art, table, backend)
    timings["l15"] = time.perf_counter() - t0
    if w15 is not None:
        run.verdict = _fail("L15", w15)
        return run

    t0 = time.perf_counter()
    w4 = check_condition4(art, table, backend)
    timings["c4"] = time.perf_counter() - t0
    if w4 is not None:
        run.verdict = _fail("C4", w4)
        return run
    return run


def check_ltt(a: CompleteAutomaton, backend: str | None = None) -> Verdict:
    """Graph-side decision: is the automaton's language locally threshold testable?"""
    return check_ltt_detailed(a, backend).verdict


def scc_entry_by_definition(art: GraphArtifacts, p: int, q: int, s: int) -> int:
    """Per-triple table entry straight from its definition (used for witness audit)."""
    n = art.n
    rt = art.reach_table
    if not art.is_cycle_pair(p, s) or not rt.reach(p, q):
        return EMPTY
    if not any(
        art.is_cycle_pair(q, r) and rt.reach(p, r) and rt.reach(r, s) for r in range(n)
    ):
        return EMPTY
    pairs = reachable_from((p, s), art.product)
    tset = [
        t
        for t in range(n)
        if (q, t) in pairs and rt.reach(q, t) and art.is_cycle_pair(q, t)
    ]
    if not tset:
        return EMPTY
    comps = {art.scc.comp_of[t] for t in tset}
    if len(comps) > 1:
        return ILL_DEFINED
    return comps.pop()


def revalidate_witness(art: GraphArtifacts, verdict: Verdict) -> bool:
    """Feed a failure witness back through the violated condition's premises
    and conclusion, using the reachability and cycle-state primitives."""
    if verdict.is_ltt or verdict.witness is None:
        return False
    w = verdict.witness
    rt = art.reach_table
    cond = verdict.failed_condition
    if cond == "C1":
        p, q = w["p"], w["q"]
        return (
            p != q
            and art.is_cycle_pair(p, q)
            and art.scc.comp_of[p] == art.scc.comp_of[q]
        )
    if cond == "C2":
        p, s, q, t, r = (w[k] for k in ("p", "s", "q", "t", "r"))
        return (
            art.is_cycle_pair(p, s)
            and (q, t) in reachable_from((p, s), art.product)
            and rt.reach(p, r)
            and rt.reach(r, s)
            and art.is_cycle_pair(r, t)
            and not rt.reach(q, t)
        )
    if cond == "C3":
        p, q, s, t1, t2 = (w[k] for k in ("p", "q", "s", "t1", "t2"))
        if scc_entry_by_definition(art, p, q, s) != ILL_DEFINED:
            return False
        pairs = reachable_from((p, s), art.product)
        for t in (t1, t2):
            if (q, t) not in pairs or not rt.reach(q, t) or not art.is_cycle_pair(q, t):
                return False
        return art.scc.comp_of[t1] != art.scc.comp_of[t2]
    if cond == "L15":
        p, q, r, q1, r1, r2 = (w[k] for k in ("p", "q", "r", "q1", "r1", "r2"))
        if not (
            art.is_cycle_pair(q, r)
            and art.is_cycle_state(p)
            and rt.reach(p, q)
            and rt.reach(p, r)
        ):
            return False
        pairs = reachable_from((q, r), art.product)
        for rx in (r1, r2):
            if (q1, rx) not in pairs or not art.is_cycle_pair(q1, rx):
                return False
            if not art.is_cycle_pair(p, rx):
                return False
        e1 = scc_entry_by_definition(art, p, q, r1)
        e2 = scc_entry_by_definition(art, p, q, r2)
        return e1 >= 0 and e2 >= 0 and e1 != e2
    if cond == "C4":
        p, q, r, q1, r1 = (w[k] for k in ("p", "q", "r", "q1", "r1"))
        if not (
            art.is_cycle_pair(q, r)
            and art.is_cycle_state(p)
            and rt.reach(p, q)
            and rt.reach(p, r)
            and art.is_cycle_pair(p, q1)
            and art.is_cycle_pair(p, r1)
        ):
            return False
        if (q1, r1) not in reachable_from((q, r), art.product):
            return False
        e1 = scc_entry_by_definition(art, p, q, r1)
        e2 = scc_entry_by_definition(art, p, r, q1)
        return e1 >= 0 and e2 >= 0 and e1 != e2
    return False
