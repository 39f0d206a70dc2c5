"""Run the graph and semigroup deciders side by side over automaton streams."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .automaton import CompleteAutomaton, serialize_automaton
from .checker import Verdict, check_ltt
from .generate import enumerate_complete_automata, random_trials
from .semigroup import DEFAULT_CAP, SemigroupCapacityError, semigroup_verdict

__all__ = ["Disagreement", "DiffSummary", "run_diff", "exhaustive_stream"]

MAX_KEPT_DISAGREEMENTS = 10


@dataclass(frozen=True)
class Disagreement:
    index: int
    automaton: CompleteAutomaton
    graph_verdict: Verdict
    semigroup_verdict: Verdict


@dataclass
class DiffSummary:
    total: int = 0
    agreements: int = 0
    skipped: int = 0  # semigroup capacity exceeded
    disagreement_count: int = 0
    disagreements: list[Disagreement] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.disagreement_count == 0

    def to_lines(self) -> list[str]:
        return [
            f"total={self.total}",
            f"agreements={self.agreements}",
            f"disagreements={self.disagreement_count}",
            f"skipped={self.skipped}",
        ]


def run_diff(
    automata: Iterable[CompleteAutomaton],
    cap: int = DEFAULT_CAP,
    backend: str | None = None,
    dump_dir: str | None = None,
) -> DiffSummary:
    """Both deciders per automaton; capacity blowups skip, mismatches record."""
    summary = DiffSummary()
    for i, a in enumerate(automata):
        summary.total += 1
        gv = check_ltt(a, backend)
        try:
            sv = semigroup_verdict(a, cap)
        except SemigroupCapacityError:
            summary.skipped += 1
            continue
        if gv.is_ltt == sv.is_ltt:
            summary.agreements += 1
            continue
        summary.disagreement_count += 1
        if len(summary.disagreements) < MAX_KEPT_DISAGREEMENTS:
            summary.disagreements.append(Disagreement(i, a, gv, sv))
        if dump_dir:
            os.makedirs(dump_dir, exist_ok=True)
            path = os.path.join(dump_dir, f"disagreement_{i:06d}.txt")
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(f"# graph: {gv.describe()}\n")
                fh.write(f"# semigroup: {sv.describe()}\n")
                fh.write(serialize_automaton(a))
    return summary


def exhaustive_stream(n_max: int, g_max: int) -> Iterator[CompleteAutomaton]:
    """All complete automata with 1 <= n <= n_max and 1 <= g <= g_max."""
    for n in range(1, n_max + 1):
        for g in range(1, g_max + 1):
            yield from enumerate_complete_automata(n, g)


def random_stream(
    n_max: int, g_max: int, trials: int, seed: int
) -> Iterator[CompleteAutomaton]:
    return random_trials(n_max, g_max, trials, seed)
