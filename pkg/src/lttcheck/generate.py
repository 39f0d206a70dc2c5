"""Reproducible random and exhaustive generation of complete automata.

The generator is xorshift64* with the multiplier 0x2545F4914F6CDD1D
(shifts 12, 25, 27).  A seed of 0 is remapped to 0x9E3779B97F4A7C15 since
the all-zero state is a fixed point.  Uniform draws use next_u64() % k;
a transition table is drawn cell by cell in row-major order (states outer,
labels inner).  Identical seeds give identical streams on every platform.
"""

from __future__ import annotations

import itertools
from typing import Iterator

from .automaton import CompleteAutomaton, complete_automaton, default_labels

__all__ = [
    "XorShift64Star",
    "random_complete_automaton",
    "random_trials",
    "enumerate_complete_automata",
]

_MASK = (1 << 64) - 1
_MULT = 0x2545F4914F6CDD1D
_ZERO_SEED = 0x9E3779B97F4A7C15


class XorShift64Star:
    def __init__(self, seed: int):
        if seed < 0:
            raise ValueError("seed must be non-negative")
        self.state = (seed & _MASK) or _ZERO_SEED

    def next_u64(self) -> int:
        s = self.state
        s ^= s >> 12
        s ^= (s << 25) & _MASK
        s ^= s >> 27
        self.state = s
        return (s * _MULT) & _MASK

    def below(self, k: int) -> int:
        if k <= 0:
            raise ValueError("k must be positive")
        return self.next_u64() % k


def random_complete_automaton(
    n: int, g: int, rng: XorShift64Star
) -> CompleteAutomaton:
    """Each delta(state, label) uniform over states, drawn in row-major order."""
    if n < 1 or g < 1:
        raise ValueError("need n >= 1 and g >= 1")
    rows = tuple(tuple(rng.below(n) for _ in range(g)) for _ in range(n))
    return complete_automaton(rows)


def random_trials(
    n_max: int, g_max: int, trials: int, seed: int
) -> Iterator[CompleteAutomaton]:
    """Stream of trial automata: draw n, then g, then the table."""
    rng = XorShift64Star(seed)
    for _ in range(trials):
        n = 1 + rng.below(n_max)
        g = 1 + rng.below(g_max)
        yield random_complete_automaton(n, g, rng)


def enumerate_complete_automata(n: int, g: int) -> Iterator[CompleteAutomaton]:
    """All n^(n*g) complete automata on n states and g labels, in table order."""
    labels = default_labels(g)
    row_space = list(itertools.product(range(n), repeat=g))
    for rows in itertools.product(row_space, repeat=n):
        yield complete_automaton(rows, labels)
