"""DFA transition graphs: data model, text format, sink completion.

The text format is line oriented::

    # optional comment (also used for initial/accepting annotations, which
    # all deciders ignore)
    <n_states> <n_labels>
    <label tokens, whitespace separated>
    <row for state 0: one target per label, "-" for undefined>
    ...
    <row for state n_states-1>

State indices are 0-based.  Blank lines and lines whose first non-blank
character is ``#`` are skipped everywhere.
"""

from __future__ import annotations

import re
import string
from dataclasses import dataclass

__all__ = [
    "Automaton",
    "CompleteAutomaton",
    "AutomatonParseError",
    "parse_automaton",
    "serialize_automaton",
    "complete_with_sink",
    "complete_automaton",
    "default_labels",
]

_TOKEN = re.compile(r"\S+")


class AutomatonParseError(ValueError):
    """Malformed automaton file; carries the 1-based line and column."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col


def default_labels(g: int) -> tuple[str, ...]:
    """Default label tokens: 'a'..'z' for g <= 26, else 'l0', 'l1', ..."""
    if g <= 26:
        return tuple(string.ascii_lowercase[:g])
    return tuple(f"l{i}" for i in range(g))


def _check_labels(labels: tuple[str, ...]) -> None:
    seen = set()
    for lab in labels:
        if not lab or _TOKEN.fullmatch(lab) is None:
            raise ValueError(f"label {lab!r} must be a non-empty token without whitespace")
        if "#" in lab:
            raise ValueError(f"label {lab!r} may not contain '#'")
        if lab in seen:
            raise ValueError(f"duplicate label {lab!r}")
        seen.add(lab)


@dataclass(frozen=True)
class Automaton:
    """A possibly partial DFA: ``rows[p][j]`` is p's target under label j, or None."""

    n_states: int
    labels: tuple[str, ...]
    rows: tuple[tuple[int | None, ...], ...]
    state_names: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.n_states < 1:
            raise ValueError("an automaton needs at least one state")
        _check_labels(self.labels)
        if len(self.rows) != self.n_states:
            raise ValueError("one transition row per state is required")
        for row in self.rows:
            if len(row) != len(self.labels):
                raise ValueError("each row needs one entry per label")
            for t in row:
                if t is not None and not (0 <= t < self.n_states):
                    raise ValueError(f"target {t!r} out of range")
        if self.state_names is not None and len(self.state_names) != self.n_states:
            raise ValueError("one state name per state is required")

    @property
    def n_labels(self) -> int:
        return len(self.labels)

    def delta(self, state: int, label: int) -> int | None:
        return self.rows[state][label]

    def is_complete(self) -> bool:
        return all(t is not None for row in self.rows for t in row)


@dataclass(frozen=True)
class CompleteAutomaton:
    """A DFA with a total transition function.

    ``sink_added`` records whether :func:`complete_with_sink` appended a sink
    state (then ``sink_index`` is its index, always the last state).
    """

    n_states: int
    labels: tuple[str, ...]
    rows: tuple[tuple[int, ...], ...]
    state_names: tuple[str, ...] | None = None
    sink_added: bool = False
    sink_index: int | None = None

    def __post_init__(self):
        if self.n_states < 1:
            raise ValueError("an automaton needs at least one state")
        _check_labels(self.labels)
        if len(self.rows) != self.n_states:
            raise ValueError("one transition row per state is required")
        for row in self.rows:
            if len(row) != len(self.labels):
                raise ValueError("each row needs one entry per label")
            for t in row:
                if not isinstance(t, int) or not (0 <= t < self.n_states):
                    raise ValueError(f"target {t!r} out of range")
        if self.state_names is not None and len(self.state_names) != self.n_states:
            raise ValueError("one state name per state is required")
        if self.sink_added:
            if self.sink_index != self.n_states - 1:
                raise ValueError("an added sink must be the last state")
            if self.rows[self.sink_index] != (self.sink_index,) * self.n_labels:
                raise ValueError("an added sink must loop to itself on every label")
        elif self.sink_index is not None:
            raise ValueError("sink_index is only meaningful with sink_added")

    @property
    def n_labels(self) -> int:
        return len(self.labels)

    def delta(self, state: int, label: int) -> int:
        return self.rows[state][label]

    def run_word(self, state: int, word: tuple[int, ...]) -> int:
        for j in word:
            state = self.rows[state][j]
        return state

    def is_complete(self) -> bool:
        return True


def complete_automaton(
    rows, labels=None, state_names=None
) -> CompleteAutomaton:
    """Convenience constructor from nested sequences; labels default to 'a', 'b', ..."""
    rows = tuple(tuple(row) for row in rows)
    g = len(rows[0]) if rows else 0
    if labels is None:
        labels = default_labels(g)
    return CompleteAutomaton(
        len(rows), tuple(labels), rows,
        tuple(state_names) if state_names is not None else None,
    )


def complete_with_sink(a: Automaton | CompleteAutomaton) -> CompleteAutomaton:
    """Route every undefined transition into a fresh all-absorbing sink state.

    A total automaton is returned unchanged (``sink_added=False``); applying
    the function twice therefore equals applying it once.
    """
    if isinstance(a, CompleteAutomaton):
        return a
    if a.is_complete():
        return CompleteAutomaton(
            a.n_states, a.labels,
            tuple(tuple(int(t) for t in row) for row in a.rows),
            a.state_names,
        )
    sink = a.n_states
    rows = [tuple(sink if t is None else int(t) for t in row) for row in a.rows]
    rows.append((sink,) * a.n_labels)
    names = a.state_names + ("sink",) if a.state_names is not None else None
    return CompleteAutomaton(
        a.n_states + 1, a.labels, tuple(rows), names,
        sink_added=True, sink_index=sink,
    )


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.lstrip()
        if not stripped or stripped.startswith("#"):
            continue
        yield lineno, raw


def _tokens(raw: str) -> list[tuple[str, int]]:
    return [(m.group(), m.start() + 1) for m in _TOKEN.finditer(raw)]


def _parse_int(tok: str, col: int, lineno: int, what: str) -> int:
    try:
        return int(tok, 10)
    except ValueError:
        raise AutomatonParseError(f"expected {what}, got {tok!r}", lineno, col) from None


def parse_automaton(text: str) -> Automaton:
    """Parse the matrix text format.  Raises :class:`AutomatonParseError`."""
    lines = _content_lines(text)
    eof_line = text.count("\n") + 2

    try:
        lineno, raw = next(lines)
    except StopIteration:
        raise AutomatonParseError("missing header line", 1, 1) from None
    toks = _tokens(raw)
    if len(toks) != 2:
        raise AutomatonParseError(
            "header must be '<n_states> <n_labels>'", lineno, toks[0][1]
        )
    n = _parse_int(toks[0][0], toks[0][1], lineno, "a state count")
    g = _parse_int(toks[1][0], toks[1][1], lineno, "a label count")
    if n < 1:
        raise AutomatonParseError("state count must be positive", lineno, toks[0][1])
    if g < 0:
        raise AutomatonParseError("label count must be non-negative", lineno, toks[1][1])

    labels: tuple[str, ...] = ()
    if g > 0:
        try:
            lineno, raw = next(lines)
        except StopIteration:
            raise AutomatonParseError("missing label line", eof_line, 1) from None
        toks = _tokens(raw)
        if len(toks) != g:
            raise AutomatonParseError(
                f"expected {g} label(s), got {len(toks)}", lineno, toks[0][1] if toks else 1
            )
        seen: dict[str, int] = {}
        for tok, col in toks:
            if "#" in tok:
                raise AutomatonParseError("labels may not contain '#'", lineno, col)
            if tok in seen:
                raise AutomatonParseError(f"duplicate label {tok!r}", lineno, col)
            seen[tok] = col
        labels = tuple(tok for tok, _ in toks)

    rows: list[tuple[int | None, ...]] = []
    for state in range(n):
        if g == 0:
            rows.append(())
            continue
        try:
            lineno, raw = next(lines)
        except StopIteration:
            raise AutomatonParseError(
                f"missing transition row for state {state}", eof_line, 1
            ) from None
        toks = _tokens(raw)
        if len(toks) != g:
            raise AutomatonParseError(
                f"expected {g} entries in row for state {state}, got {len(toks)}",
                lineno, toks[0][1] if toks else 1,
            )
        row: list[int | None] = []
        for tok, col in toks:
            if tok == "-":
                row.append(None)
                continue
            t = _parse_int(tok, col, lineno, "a state index or '-'")
            if not (0 <= t < n):
                raise AutomatonParseError(f"state index {t} out of range", lineno, col)
            row.append(t)
        rows.append(tuple(row))

    leftover = next(lines, None)
    if leftover is not None:
        lineno, raw = leftover
        raise AutomatonParseError("unexpected content after last row", lineno, _tokens(raw)[0][1])
    return Automaton(n, labels, tuple(rows))


def serialize_automaton(a: Automaton | CompleteAutomaton) -> str:
    """Emit the matrix text format; ``parse_automaton`` round-trips it."""
    out = [f"{a.n_states} {a.n_labels}", " ".join(a.labels)]
    for row in a.rows:
        out.append(" ".join("-" if t is None else str(t) for t in row))
    return "\n".join(out) + "\n"
