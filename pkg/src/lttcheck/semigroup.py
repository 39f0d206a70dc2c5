"""Transition semigroup oracle: aperiodicity plus the two-sided idempotent identity.

The semigroup of a complete automaton is the closure of the letter
transformations under composition in word order (apply the first factor's
map first).  The decider passes iff the semigroup is aperiodic and
e·a·f·u·e·b·f = e·b·f·u·e·a·f for all idempotents e, f and elements a, u, b.

A semigroup can also be loaded from a Cayley matrix file:

    <n_elements> <n_generators>
    n_elements rows, each listing the product of that element by each generator

``#`` starts a full-line comment.  A ``# generators: i0 i1 ...`` comment pins
which elements the generator columns denote; without it, generator j is
element j.  Parsing validates that the generators generate every listed
element and that the table is the action of an associative product.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property

from .automaton import (
    CompleteAutomaton,
    _content_lines,
    _parse_int,
    _tokens,
    default_labels,
)
from .checker import Verdict

__all__ = [
    "DEFAULT_CAP",
    "SemigroupCapacityError",
    "CayleyParseError",
    "TransitionSemigroup",
    "CayleySemigroup",
    "build_semigroup",
    "is_aperiodic",
    "satisfies_identity",
    "abstract_semigroup_verdict",
    "semigroup_check_detailed",
    "semigroup_verdict",
    "parse_cayley",
    "serialize_cayley",
]

DEFAULT_CAP = 200_000


class SemigroupCapacityError(Exception):
    """Closure grew past the element cap."""

    def __init__(self, cap: int, reached: int):
        super().__init__(f"semigroup exceeds {cap} elements (stopped at {reached})")
        self.cap = cap
        self.reached = reached


class CayleyParseError(ValueError):
    def __init__(self, message: str, line: int, col: int = 1):
        super().__init__(f"line {line}, col {col}: {message}")
        self.line = line
        self.col = col


def _word_str(word: tuple[int, ...], labels: tuple[str, ...]) -> str:
    sep = "" if all(len(l) == 1 for l in labels) else " "
    return sep.join(labels[j] for j in word)


@dataclass(frozen=True)
class TransitionSemigroup:
    """Closure of the letter maps of a complete automaton.

    images[x] is the state map of element x; elements are indexed in
    breadth-first discovery order, so words[x] is the shortest (then
    lexicographically first) word realizing x.
    """

    n_states: int
    labels: tuple[str, ...]
    images: tuple[tuple[int, ...], ...]
    gen_edges: tuple[tuple[int, ...], ...]  # gen_edges[x][j] = x * letter_j
    words: tuple[tuple[int, ...], ...]
    gen_elements: tuple[int, ...]  # element index of each letter map
    idempotents: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.images)

    @cached_property
    def _index(self) -> dict[tuple[int, ...], int]:
        return {img: i for i, img in enumerate(self.images)}

    def compose(self, x: int, y: int) -> int:
        """Element of word(x)·word(y): apply x's map, then y's."""
        yimg = self.images[y]
        return self._index[tuple(yimg[v] for v in self.images[x])]

    def word_str(self, x: int) -> str:
        return _word_str(self.words[x], self.labels)

    def element_of_word(self, word: tuple[int, ...]) -> int:
        if not word:
            raise ValueError("the semigroup has no empty-word element")
        z = self.gen_elements[word[0]]
        for j in word[1:]:
            z = self.gen_edges[z][j]
        return z


def _idempotents(size: int, compose) -> tuple[int, ...]:
    return tuple(x for x in range(size) if compose(x, x) == x)


def build_semigroup(a: CompleteAutomaton, cap: int = DEFAULT_CAP) -> TransitionSemigroup:
    """Breadth-first closure from the letter maps; dedup by image vector."""
    n = a.n_states
    g = a.n_labels
    letter_maps = [tuple(a.rows[p][j] for p in range(n)) for j in range(g)]

    images: list[tuple[int, ...]] = []
    words: list[tuple[int, ...]] = []
    index: dict[tuple[int, ...], int] = {}
    gen_elements: list[int] = []
    for j, img in enumerate(letter_maps):
        if img not in index:
            index[img] = len(images)
            images.append(img)
            words.append((j,))
        gen_elements.append(index[img])
    if len(images) > cap:
        raise SemigroupCapacityError(cap, len(images))

    gen_edges: list[tuple[int, ...]] = []
    queue = deque(range(len(images)))
    while queue:
        x = queue.popleft()
        edges = []
        for j in range(g):
            lm = letter_maps[j]
            img = tuple(lm[v] for v in images[x])
            y = index.get(img)
            if y is None:
                y = len(images)
                if y >= cap:
                    raise SemigroupCapacityError(cap, y + 1)
                index[img] = y
                images.append(img)
                words.append(words[x] + (j,))
                queue.append(y)
            edges.append(y)
        gen_edges.append(tuple(edges))

    sg = TransitionSemigroup(
        n, a.labels, tuple(images), tuple(gen_edges), tuple(words),
        tuple(gen_elements), (),
    )
    object.__setattr__(sg, "idempotents", _idempotents(sg.size, sg.compose))
    return sg


def is_aperiodic(sg) -> tuple[int, int] | None:
    """None if every power chain stabilizes; else (element, cycle length >= 2)."""
    for x in range(sg.size):
        seen = {x: 0}
        y = x
        k = 0
        while True:
            y = sg.compose(y, x)
            k += 1
            if y in seen:
                period = k - seen[y]
                break
            seen[y] = k
        if period != 1:
            return (x, period)
    return None


def satisfies_identity(sg) -> tuple[int, int, int, int, int] | None:
    """First (e, f, a, u, b) with eafuebf != ebfueaf, or None.

    For fixed idempotents e, f the products eaf range exactly over eSf, so the
    scan runs over that set with each value represented by its smallest a.
    The reported witness matches a literal five-nested-loop scan over
    (e, f, a, u, b) in ascending element order.
    """
    size = sg.size
    compose = sg.compose
    for e in sg.idempotents:
        for f in sg.idempotents:
            reps: list[tuple[int, int]] = []  # (value eaf, smallest a)
            seen: set[int] = set()
            for a in range(size):
                x = compose(compose(e, a), f)
                if x not in seen:
                    seen.add(x)
                    reps.append((x, a))
            if len(reps) < 2:
                continue
            for x, a in reps:
                for u in range(size):
                    xu = compose(x, u)
                    for y, b in reps:
                        if y == x:
                            continue
                        if compose(xu, y) != compose(compose(y, u), x):
                            return (e, f, a, u, b)
    return None


def abstract_semigroup_verdict(sg) -> Verdict:
    """Aperiodicity first, then the identity, over any semigroup object."""
    ap = is_aperiodic(sg)
    if ap is not None:
        x, period = ap
        return Verdict(
            False,
            "APERIODICITY",
            {"element": x, "period": period},
            {"element": sg.word_str(x)},
        )
    ident = satisfies_identity(sg)
    if ident is not None:
        names = ("e", "f", "a", "u", "b")
        witness = dict(zip(names, ident))
        return Verdict(
            False,
            "IDENTITY",
            witness,
            {k: sg.word_str(v) for k, v in witness.items()},
        )
    return Verdict(True)


def semigroup_check_detailed(
    a: CompleteAutomaton, cap: int = DEFAULT_CAP
) -> tuple[Verdict, dict[str, float], dict[str, int]]:
    """Semigroup-side decision with phase timings and size stats."""
    import time

    t0 = time.perf_counter()
    sg = build_semigroup(a, cap)
    t1 = time.perf_counter()
    verdict = abstract_semigroup_verdict(sg)
    t2 = time.perf_counter()
    times = {"build": t1 - t0, "verdict": t2 - t1}
    stats = {"size": sg.size, "idempotents": len(sg.idempotents)}
    return verdict, times, stats


def semigroup_verdict(a: CompleteAutomaton, cap: int = DEFAULT_CAP) -> Verdict:
    """Semigroup-side decision; aperiodicity is checked before the identity."""
    return abstract_semigroup_verdict(build_semigroup(a, cap))


@dataclass(frozen=True)
class CayleySemigroup:
    """Abstract semigroup reconstructed from an elements-by-generators matrix.

    right[y][x] = x·y; built during validation, so compose is one lookup.
    """

    table: tuple[tuple[int, ...], ...]  # table[x][j] = x * generator_j
    gen_elements: tuple[int, ...]
    labels: tuple[str, ...]
    words: tuple[tuple[int, ...], ...]
    right: tuple[tuple[int, ...], ...]
    idempotents: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.table)

    def compose(self, x: int, y: int) -> int:
        return self.right[y][x]

    def word_str(self, x: int) -> str:
        return _word_str(self.words[x], self.labels)


_GEN_DIRECTIVE = "generators:"


def _scan_generator_directive(text: str) -> tuple[list[int], int] | None:
    found = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped.startswith("#"):
            continue
        body = stripped[1:].strip()
        if not body.startswith(_GEN_DIRECTIVE):
            continue
        if found is not None:
            raise CayleyParseError("duplicate generators directive", lineno)
        toks = body[len(_GEN_DIRECTIVE):].split()
        gens = []
        for t in toks:
            try:
                gens.append(int(t, 10))
            except ValueError:
                raise CayleyParseError(
                    f"bad generator index {t!r} in directive", lineno
                ) from None
        found = (gens, lineno)
    return found


def parse_cayley(text: str) -> CayleySemigroup:
    """Parse and validate a Cayley matrix file.  Raises :class:`CayleyParseError`."""
    directive = _scan_generator_directive(text)
    lines = _content_lines(text)
    eof_line = text.count("\n") + 2
    try:
        lineno, raw = next(lines)
    except StopIteration:
        raise CayleyParseError("missing header line", eof_line) from None
    toks = _tokens(raw)
    if len(toks) != 2:
        raise CayleyParseError(
            "header must be exactly '<n_elements> <n_generators>'",
            lineno, toks[0][1] if toks else 1,
        )
    try:
        m = _parse_int(toks[0][0], toks[0][1], lineno, "element count")
        g = _parse_int(toks[1][0], toks[1][1], lineno, "generator count")
    except ValueError as err:
        raise CayleyParseError(str(err).split(": ", 1)[-1], lineno) from None
    if m < 1:
        raise CayleyParseError("need at least one element", lineno, toks[0][1])
    if g < 1:
        raise CayleyParseError("need at least one generator", lineno, toks[1][1])

    if directive is not None:
        gens, dline = directive
        if len(gens) != g:
            raise CayleyParseError(
                f"generators directive lists {len(gens)} indices, expected {g}", dline
            )
        bad = [i for i in gens if not 0 <= i < m]
        if bad:
            raise CayleyParseError(f"generator index {bad[0]} out of range", dline)
    else:
        if g > m:
            raise CayleyParseError(
                f"{g} generators but only {m} elements; add a generators directive",
                lineno,
            )
        gens = list(range(g))

    table: list[tuple[int, ...]] = []
    for _ in range(m):
        try:
            lineno, raw = next(lines)
        except StopIteration:
            raise CayleyParseError(
                f"expected {m} matrix rows, found {len(table)}", eof_line
            ) from None
        toks = _tokens(raw)
        if len(toks) != g:
            raise CayleyParseError(
                f"row {len(table)} must have {g} entries, found {len(toks)}",
                lineno, toks[0][1] if toks else 1,
            )
        row = []
        for tok, col in toks:
            try:
                v = _parse_int(tok, col, lineno, "element index")
            except ValueError as err:
                raise CayleyParseError(str(err).split(": ", 1)[-1], lineno, col) from None
            if not 0 <= v < m:
                raise CayleyParseError(
                    f"element index {v} out of range [0, {m})", lineno, col
                )
            row.append(v)
        table.append(tuple(row))
    for lineno, raw in lines:
        raise CayleyParseError("unexpected content after last row", lineno)

    # Right-multiplication maps: right[y][x] = x*y.  Generator columns come
    # straight from the table; the rest follow by breadth-first closure.
    right: list[list[int] | None] = [None] * m
    words: list[tuple[int, ...] | None] = [None] * m
    order: list[int] = []
    for j, e in enumerate(gens):
        col = [table[x][j] for x in range(m)]
        if right[e] is None:
            right[e] = col
            words[e] = (j,)
            order.append(e)
        elif right[e] != col:
            raise CayleyParseError(
                f"generators {words[e][0]} and {j} name element {e} "
                "but their columns differ", 1,
            )
    head = 0
    while head < len(order):
        y = order[head]
        head += 1
        ry = right[y]
        for j in range(g):
            z = table[y][j]  # z = y * generator_j
            col = [table[ry[x]][j] for x in range(m)]
            if right[z] is None:
                right[z] = col
                words[z] = words[y] + (j,)
                order.append(z)
            elif right[z] != col:
                raise CayleyParseError(
                    f"inconsistent action: element {y} times generator {j} "
                    f"contradicts the derived products of element {z}", 1,
                )
    missing = [x for x in range(m) if right[x] is None]
    if missing:
        raise CayleyParseError(
            f"element {missing[0]} is not generated by the generators", 1
        )

    sg = CayleySemigroup(
        tuple(table), tuple(gens), default_labels(g),
        tuple(words), tuple(tuple(r) for r in right), (),
    )
    object.__setattr__(sg, "idempotents", _idempotents(m, sg.compose))
    return sg


def serialize_cayley(sg: TransitionSemigroup | CayleySemigroup) -> str:
    """Elements-by-generators matrix with word annotations; parse_cayley inverse."""
    if isinstance(sg, CayleySemigroup):
        rows = sg.table
    else:
        rows = sg.gen_edges
    g = len(sg.gen_elements)
    out = [f"{sg.size} {g}"]
    out.append("# generators: " + " ".join(str(e) for e in sg.gen_elements))
    for x in range(sg.size):
        out.append(f"# element {x}: {sg.word_str(x)}")
        out.append(" ".join(str(v) for v in rows[x]))
    return "\n".join(out) + "\n"
