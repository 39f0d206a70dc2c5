"""Independent reference implementations used to pin expected values.

Everything here favors directness over speed: boolean matrix squaring for
reachability, literal nested loops for the conditions (no candidate
screening, no shared per-pair caches), and full five-loop enumeration for
the semigroup identity.  The package under test must agree exactly,
including witness tuples and table tags.
"""

from __future__ import annotations

import numpy as np

EMPTY = -1
ILL_DEFINED = -2


def adjacency(n, successors):
    m = np.zeros((n, n), dtype=bool)
    for v in range(n):
        for w in successors(v):
            m[v, w] = True
    return m


def reach_by_squaring(adj: np.ndarray) -> np.ndarray:
    """Reflexive-transitive closure: square (A or I) until it stops changing."""
    m = adj | np.eye(adj.shape[0], dtype=bool)
    while True:
        m2 = m @ m
        if np.array_equal(m2, m):
            return m
        m = m2


def cyclic_nodes_brute(adj: np.ndarray) -> set[int]:
    """v lies on a cycle iff some positive-length path returns to v."""
    positive = adj @ reach_by_squaring(adj)
    return {v for v in range(adj.shape[0]) if positive[v, v]}


def brute_partition(n, successors) -> list[int]:
    """Mutual-reachability classes, numbered by rank of their smallest node."""
    closure = reach_by_squaring(adjacency(n, successors))
    mutual = closure & closure.T
    comp_min = [min(np.flatnonzero(mutual[v])) for v in range(n)]
    ranks = {m: i for i, m in enumerate(sorted(set(comp_min)))}
    return [ranks[m] for m in comp_min]


def automaton_successors(a):
    return lambda v: [a.rows[v][j] for j in range(a.n_labels)]


def pair_successors(a):
    n = a.n_states
    def succ(v):
        p, q = divmod(v, n)
        return [a.rows[p][j] * n + a.rows[q][j] for j in range(a.n_labels)]
    return succ


def graph_facts(a):
    """All primitives recomputed from scratch: reach, components, cycle sets."""
    n = a.n_states
    adj = adjacency(n, automaton_successors(a))
    reach = reach_by_squaring(adj)
    comp = brute_partition(n, automaton_successors(a))
    cyc_state = cyclic_nodes_brute(adj)
    adj2 = adjacency(n * n, pair_successors(a))
    reach2 = reach_by_squaring(adj2)
    cyc_pair = cyclic_nodes_brute(adj2)
    return n, reach, comp, cyc_state, reach2, cyc_pair


def oracle_condition1(a):
    n, reach, comp, _, _, cyc_pair = graph_facts(a)
    for p in range(n):
        for q in range(n):
            if p != q and p * n + q in cyc_pair and comp[p] == comp[q]:
                return (p, q)
    return None


def oracle_condition2(a):
    n, reach, _, _, reach2, cyc_pair = graph_facts(a)
    for p in range(n):
        for s in range(n):
            if p * n + s not in cyc_pair:
                continue
            for q in range(n):
                for t in range(n):
                    if not reach2[p * n + s, q * n + t]:
                        continue
                    if reach[q, t]:
                        continue
                    for r in range(n):
                        if reach[p, r] and reach[r, s] and r * n + t in cyc_pair:
                            return (p, s, q, t, r)
    return None


def _triple_entry(n, reach, comp, reach2, cyc_pair, p, q, s):
    if p * n + s not in cyc_pair or not reach[p, q]:
        return EMPTY
    if not any(
        q * n + r in cyc_pair and reach[p, r] and reach[r, s] for r in range(n)
    ):
        return EMPTY
    tset = [
        t for t in range(n)
        if reach2[p * n + s, q * n + t] and reach[q, t] and q * n + t in cyc_pair
    ]
    if not tset:
        return EMPTY
    comps = {comp[t] for t in tset}
    return comps.pop() if len(comps) == 1 else ILL_DEFINED


def oracle_scc_table(a):
    """Flat (p,q,s) table plus the first ill-defined witness, if any."""
    n, reach, comp, _, reach2, cyc_pair = graph_facts(a)
    table = np.full(n * n * n, EMPTY, dtype=np.int32)
    witness = None
    for p in range(n):
        for q in range(n):
            for s in range(n):
                e = _triple_entry(n, reach, comp, reach2, cyc_pair, p, q, s)
                table[(p * n + q) * n + s] = e
                if e == ILL_DEFINED and witness is None:
                    tset = [
                        t for t in range(n)
                        if reach2[p * n + s, q * n + t]
                        and reach[q, t] and q * n + t in cyc_pair
                    ]
                    t1 = tset[0]
                    t2 = next(t for t in tset if comp[t] != comp[t1])
                    witness = (p, q, s, t1, t2)
    return table, witness


def oracle_lemma15(a, table):
    n, reach, comp, cyc_state, reach2, cyc_pair = graph_facts(a)
    for q in range(n):
        for r in range(n):
            if q * n + r not in cyc_pair:
                continue
            pset = [
                p for p in range(n)
                if p in cyc_state and reach[p, q] and reach[p, r]
            ]
            if not pset:
                continue
            for q1 in range(n):
                rset = [
                    r1 for r1 in range(n)
                    if reach2[q * n + r, q1 * n + r1] and q1 * n + r1 in cyc_pair
                ]
                if len(rset) < 2:
                    continue
                for p in pset:
                    first_val = first_r1 = None
                    for r1 in rset:
                        if p * n + r1 not in cyc_pair:
                            continue
                        ent = int(table[(p * n + q) * n + r1])
                        if ent < 0:
                            continue
                        if first_val is None:
                            first_val, first_r1 = ent, r1
                        elif ent != first_val:
                            return (p, q, r, q1, first_r1, r1)
    return None


def oracle_condition4(a, table):
    n, reach, comp, cyc_state, reach2, cyc_pair = graph_facts(a)
    for q in range(n):
        for r in range(n):
            if q * n + r not in cyc_pair:
                continue
            pset = [
                p for p in range(n)
                if p in cyc_state and reach[p, q] and reach[p, r]
            ]
            for p in pset:
                for q1 in range(n):
                    if p * n + q1 not in cyc_pair:
                        continue
                    b_ent = int(table[(p * n + r) * n + q1])
                    if b_ent < 0:
                        continue
                    for r1 in range(n):
                        if not reach2[q * n + r, q1 * n + r1]:
                            continue
                        if p * n + r1 not in cyc_pair:
                            continue
                        a_ent = int(table[(p * n + q) * n + r1])
                        if a_ent >= 0 and a_ent != b_ent:
                            return (p, q, r, q1, r1)
    return None


def word_closure(a, max_len=None):
    """Distinct transformation vectors of all nonempty words, layer by layer."""
    n = a.n_states
    letters = [tuple(a.rows[p][j] for p in range(n)) for j in range(a.n_labels)]
    seen = set(letters)
    layer = set(letters)
    length = 1
    while layer and (max_len is None or length < max_len):
        nxt = set()
        for img in layer:
            for lm in letters:
                prod = tuple(lm[v] for v in img)
                if prod not in seen:
                    seen.add(prod)
                    nxt.add(prod)
        layer = nxt
        length += 1
    return seen


def compose_table(sg) -> np.ndarray:
    m = sg.size
    table = np.empty((m, m), dtype=np.int64)
    for x in range(m):
        for y in range(m):
            table[x, y] = sg.compose(x, y)
    return table


def literal_identity_pure(sg):
    """Plain five nested loops; usable only for small semigroups."""
    c = compose_table(sg)
    idems = list(sg.idempotents)
    m = sg.size
    for e in idems:
        for f in idems:
            for a in range(m):
                x = c[c[e, a], f]
                for u in range(m):
                    for b in range(m):
                        y = c[c[e, b], f]
                        if c[c[x, u], y] != c[c[y, u], x]:
                            return (e, f, a, u, b)
    return None


def literal_identity_check(sg):
    """First violating (e,f,a,u,b) in ascending scan order, found by
    enumerating every tuple (vectorized, but with no eSf restriction)."""
    c = compose_table(sg)
    m = sg.size
    all_el = np.arange(m)
    for e in sg.idempotents:
        for f in sg.idempotents:
            x = c[c[e, all_el], f]  # x[a] = e a f
            xu = c[x[:, None], all_el[None, :]]  # (a, u)
            lhs = c[xu[:, :, None], x[None, None, :]]  # (a, u, b)
            yu = c[x[:, None], all_el[None, :]]  # (b, u)
            rhs = c[yu[:, :, None], x[None, None, :]]  # (b, u, a)
            bad = lhs != np.transpose(rhs, (2, 1, 0))
            if bad.any():
                a, u, b = np.unravel_index(int(np.argmax(bad)), bad.shape)
                return (e, f, int(a), int(u), int(b))
    return None
