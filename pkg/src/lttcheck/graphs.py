"""Graph machinery on transition graphs: SCCs, cycle states, reachability, pair graph.

Component ids are canonical: components are numbered by their minimum node, so
two runs (and independent implementations) agree on ids, not just partitions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence

import numpy as np

from .automaton import CompleteAutomaton

__all__ = [
    "SccDecomposition",
    "ReachabilityTable",
    "ProductGraph",
    "strongly_connected_components",
    "scc",
    "cycle_states",
    "reachability",
    "product_square",
    "reachable_from",
]

PairNode = tuple[int, int]


@dataclass(frozen=True)
class SccDecomposition:
    """comp_of[v] is v's component id; has_internal_edge marks components with an edge inside."""

    comp_of: tuple[int, ...]
    comp_count: int
    has_internal_edge: tuple[bool, ...]

    def components(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.comp_count)]
        for v, c in enumerate(self.comp_of):
            out[c].append(v)
        return out

    def same_component(self, u: int, v: int) -> bool:
        return self.comp_of[u] == self.comp_of[v]

    def debug_dump(self) -> str:
        return "\n".join(f"{v} {c}" for v, c in enumerate(self.comp_of)) + "\n"


def _tarjan_raw(n: int, successors: Callable[[int], Sequence[int]]) -> tuple[list[int], int]:
    """Iterative Tarjan; returns raw component ids in emission order.

    Emission order is reverse topological: an edge u -> v between distinct
    components implies comp_raw[v] < comp_raw[u].
    """
    index = [-1] * n
    low = [0] * n
    on_stack = bytearray(n)
    stack: list[int] = []
    comp_raw = [-1] * n
    counter = 0
    comp_count = 0
    for root in range(n):
        if index[root] != -1:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = 1
        work: list[tuple[int, Iterator[int]]] = [(root, iter(successors(root)))]
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = 1
                    work.append((w, iter(successors(w))))
                    advanced = True
                    break
                if on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
            if advanced:
                continue
            work.pop()
            if work and low[v] < low[work[-1][0]]:
                low[work[-1][0]] = low[v]
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = 0
                    comp_raw[w] = comp_count
                    if w == v:
                        break
                comp_count += 1
    return comp_raw, comp_count


def strongly_connected_components(
    n: int, successors: Callable[[int], Sequence[int]]
) -> SccDecomposition:
    """SCC decomposition of an implicit graph, with canonical component ids."""
    comp_raw, m = _tarjan_raw(n, successors)
    min_node = [n] * m
    for v in range(n):
        c = comp_raw[v]
        if v < min_node[c]:
            min_node[c] = v
    order = sorted(range(m), key=min_node.__getitem__)
    remap = [0] * m
    for new_id, old_id in enumerate(order):
        remap[old_id] = new_id
    comp_of = tuple(remap[comp_raw[v]] for v in range(n))
    internal = [False] * m
    for v in range(n):
        cv = comp_of[v]
        for w in successors(v):
            if comp_of[w] == cv:
                internal[cv] = True
                break
    return SccDecomposition(comp_of, m, tuple(internal))


@dataclass(frozen=True)
class ProductGraph:
    """The pair graph of an automaton: n^2 nodes (p,q), edges (p,q) -> (p.j, q.j)."""

    n: int
    g: int
    rows: tuple[tuple[int, ...], ...]

    @property
    def node_count(self) -> int:
        return self.n * self.n

    @property
    def edge_count(self) -> int:
        return self.n * self.n * self.g

    def pair_id(self, p: int, q: int) -> int:
        return p * self.n + q

    def id_to_pair(self, v: int) -> PairNode:
        return divmod(v, self.n)

    def successors(self, v: int) -> tuple[int, ...]:
        p, q = divmod(v, self.n)
        rp = self.rows[p]
        rq = self.rows[q]
        n = self.n
        return tuple(rp[j] * n + rq[j] for j in range(self.g))

    def edges(self) -> Iterable[tuple[PairNode, int, PairNode]]:
        for v in range(self.node_count):
            p, q = divmod(v, self.n)
            for j in range(self.g):
                yield (p, q), j, (self.rows[p][j], self.rows[q][j])


def product_square(a: CompleteAutomaton) -> ProductGraph:
    return ProductGraph(a.n_states, a.n_labels, a.rows)


def scc(obj: CompleteAutomaton | ProductGraph) -> SccDecomposition:
    """SCC decomposition of an automaton's graph or of its pair graph."""
    if isinstance(obj, ProductGraph):
        return strongly_connected_components(obj.node_count, obj.successors)
    return strongly_connected_components(obj.n_states, lambda v: obj.rows[v])


def cycle_states(d: SccDecomposition) -> frozenset[int]:
    """Nodes fixed by some non-empty word: members of components with an internal edge."""
    return frozenset(
        v for v, c in enumerate(d.comp_of) if d.has_internal_edge[c]
    )


@dataclass(frozen=True)
class ReachabilityTable:
    """Bit-matrix reachability: row p is an int whose bit q means p reaches q.

    Reachability is reflexive (zero-length paths count).
    """

    n: int
    rows: tuple[int, ...]

    def reach(self, p: int, q: int) -> bool:
        return bool((self.rows[p] >> q) & 1)

    def row_states(self, p: int) -> list[int]:
        return [q for q in range(self.n) if (self.rows[p] >> q) & 1]

    def to_matrix(self) -> np.ndarray:
        mat = np.zeros((self.n, self.n), dtype=np.uint8)
        for p, row in enumerate(self.rows):
            for q in range(self.n):
                if (row >> q) & 1:
                    mat[p, q] = 1
        return mat


def reachability(a: CompleteAutomaton) -> ReachabilityTable:
    """All-pairs reachability over the transition graph in O(n^2 g / wordsize)."""
    n = a.n_states
    comp_raw, m = _tarjan_raw(n, lambda v: a.rows[v])
    members: list[list[int]] = [[] for _ in range(m)]
    for v in range(n):
        members[comp_raw[v]].append(v)
    comp_row = [0] * m
    # Emission order is reverse topological, so successors are already done.
    for c in range(m):
        row = 0
        for v in members[c]:
            row |= 1 << v
        for v in members[c]:
            for w in a.rows[v]:
                cw = comp_raw[w]
                if cw != c:
                    row |= comp_row[cw]
        comp_row[c] = row
    return ReachabilityTable(n, tuple(comp_row[comp_raw[v]] for v in range(n)))


def reachable_from(source: PairNode, pg: ProductGraph) -> frozenset[PairNode]:
    """Pair nodes reachable from ``source`` in the pair graph (source included)."""
    n = pg.n
    src = source[0] * n + source[1]
    visited = bytearray(pg.node_count)
    visited[src] = 1
    queue = [src]
    head = 0
    rows = pg.rows
    g = pg.g
    while head < len(queue):
        v = queue[head]
        head += 1
        p, q = divmod(v, n)
        rp = rows[p]
        rq = rows[q]
        for j in range(g):
            w = rp[j] * n + rq[j]
            if not visited[w]:
                visited[w] = 1
                queue.append(w)
    return frozenset(divmod(v, n) for v in queue)
