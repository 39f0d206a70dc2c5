import numpy as np
import pytest

import oracles
from lttcheck.automaton import complete_automaton
from lttcheck.generate import XorShift64Star, random_complete_automaton
from lttcheck.graphs import (
    cycle_states,
    product_square,
    reachability,
    reachable_from,
    scc,
    strongly_connected_components,
)


def random_cases(count, n_max, g_max, seed):
    rng = XorShift64Star(seed)
    for _ in range(count):
        n = 1 + rng.below(n_max)
        g = 1 + rng.below(g_max)
        yield random_complete_automaton(n, g, rng)


def test_scc_matches_brute_partition():
    for a in random_cases(200, 12, 3, seed=101):
        dec = scc(a)
        brute = oracles.brute_partition(a.n_states, oracles.automaton_successors(a))
        assert list(dec.comp_of) == brute


def test_scc_component_ids_are_rank_of_min_node():
    a = complete_automaton(((1, 0), (0, 1), (2, 2), (1, 3)))
    dec = scc(a)
    comps = dec.components()
    mins = [min(c) for c in comps]
    assert mins == sorted(mins)
    for cid, members in enumerate(comps):
        for v in members:
            assert dec.comp_of[v] == cid


def test_reachability_matches_squaring():
    for a in random_cases(200, 12, 3, seed=202):
        rt = reachability(a)
        adj = oracles.adjacency(a.n_states, oracles.automaton_successors(a))
        expect = oracles.reach_by_squaring(adj)
        assert np.array_equal(rt.to_matrix().astype(bool), expect)


def test_reachability_row_states():
    a = complete_automaton(((1,), (1,)))
    rt = reachability(a)
    assert rt.row_states(0) == [0, 1]
    assert rt.row_states(1) == [1]
    assert rt.reach(0, 1) and not rt.reach(1, 0)
    assert rt.reach(0, 0)  # reflexive


def test_cycle_states_match_brute():
    for a in random_cases(150, 10, 2, seed=303):
        got = cycle_states(scc(a))
        adj = oracles.adjacency(a.n_states, oracles.automaton_successors(a))
        assert got == oracles.cyclic_nodes_brute(adj)


def test_cycle_states_need_internal_edge():
    # 0 and 1 swap (cycle); 2 only feeds forward (not a cycle state)
    a = complete_automaton(((1,), (0,), (0,)))
    assert cycle_states(scc(a)) == {0, 1}


def test_product_square_structure():
    a = complete_automaton(((1, 0), (0, 1)))
    pg = product_square(a)
    assert pg.node_count == 4
    assert pg.edge_count == 8
    v = pg.pair_id(0, 1)
    assert pg.id_to_pair(v) == (0, 1)
    # letter a swaps both coordinates, letter b fixes both
    assert pg.successors(v) == (pg.pair_id(1, 0), pg.pair_id(0, 1))
    edges = list(pg.edges())
    assert ((0, 1), 0, (1, 0)) in edges
    assert len(edges) == 8


def test_pair_scc_matches_brute():
    for a in random_cases(100, 6, 3, seed=404):
        pg = product_square(a)
        dec = scc(pg)
        brute = oracles.brute_partition(pg.node_count, oracles.pair_successors(a))
        assert list(dec.comp_of) == brute


def test_reachable_from_matches_closure_row():
    for a in random_cases(100, 6, 2, seed=505):
        n = a.n_states
        pg = product_square(a)
        adj2 = oracles.adjacency(n * n, oracles.pair_successors(a))
        reach2 = oracles.reach_by_squaring(adj2)
        for src in range(0, n * n, max(1, n)):
            p, q = divmod(src, n)
            got = reachable_from((p, q), pg)
            expect = {divmod(v, n) for v in np.flatnonzero(reach2[src])}
            assert got == expect


def test_strongly_connected_components_callable_form():
    comp = strongly_connected_components(3, lambda v: [(v + 1) % 3])
    assert comp.comp_count == 1
    assert comp.has_internal_edge == (True,)
    comp = strongly_connected_components(3, lambda v: [min(v + 1, 2)])
    assert comp.comp_count == 3
    # only the self-looping last node has an internal edge
    assert comp.has_internal_edge == (False, False, True)


def test_empty_label_graph():
    a = complete_automaton(((), ()), labels=())
    dec = scc(a)
    assert dec.comp_count == 2
    assert cycle_states(dec) == frozenset()
    rt = reachability(a)
    assert rt.reach(0, 0) and not rt.reach(0, 1)
