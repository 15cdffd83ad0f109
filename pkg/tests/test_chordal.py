from itertools import combinations, permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from chordal_powers import oracle
from chordal_powers.chordal import (
    NotPESError,
    VertexOrdering,
    colors_chordal,
    colors_count,
    fill_in,
    gavril_stable_set,
    is_chordal,
    lex_bfs,
    maximal_cliques_chordal,
    mcs,
    verify_pes,
)
from chordal_powers.families import complete_graph, cycle_graph, path_graph, sun
from chordal_powers.generators import random_tree
from chordal_powers.graph import Graph, GraphError
from chordal_powers.rng import SplitMix64

from conftest import chordal_graphs, graphs


def _brute_simplicial_order(g: Graph, sigma) -> bool:
    pos = {v: i for i, v in enumerate(sigma)}
    for v in g.vertices():
        later = [w for w in g.adjacency[v] if pos[w] > pos[v]]
        if not g.is_clique(later):
            return False
    return True


def test_orderings_on_small_examples():
    for order in (lex_bfs, mcs):
        assert verify_pes(complete_graph(5), order(complete_graph(5)))
        assert not verify_pes(cycle_graph(4), order(cycle_graph(4)))
        assert verify_pes(sun(5), order(sun(5)))
    assert mcs(path_graph(3)).sigma[0] in (0, 2)


def test_ordering_inverse_is_consistent():
    sigma = lex_bfs(sun(4))
    assert sorted(sigma.sigma) == list(range(8))
    assert all(sigma.sigma[sigma.sigma_inv[v]] == v for v in range(8))


def test_verify_pes_examples():
    assert all(verify_pes(complete_graph(4), VertexOrdering.from_sequence(p)) for p in permutations(range(4)))
    assert not any(verify_pes(cycle_graph(4), VertexOrdering.from_sequence(p)) for p in permutations(range(4)))
    assert not verify_pes(path_graph(3), VertexOrdering.from_sequence([1, 0, 2]))
    with pytest.raises(GraphError):
        verify_pes(path_graph(3), [0, 0, 1])


@given(graphs(max_n=8), st.randoms(use_true_random=False))
def test_verify_pes_matches_the_literal_check(g, rnd):
    sigma = list(range(g.n))
    rnd.shuffle(sigma)
    assert verify_pes(g, sigma) == _brute_simplicial_order(g, sigma)


@given(graphs(max_n=10))
def test_recognizers_agree_with_oracle(g):
    want = oracle.is_chordal_oracle(g)
    assert is_chordal(g) == want
    assert verify_pes(g, lex_bfs(g)) == want
    assert verify_pes(g, mcs(g)) == want


def test_chordality_examples(sun_with_two_chords):
    rng = SplitMix64(5)
    assert all(is_chordal(random_tree(rng, n)) for n in range(1, 13))
    assert not is_chordal(cycle_graph(5))
    assert is_chordal(sun_with_two_chords)


def test_maximal_cliques_examples(four_triangles):
    k5 = complete_graph(5)
    assert maximal_cliques_chordal(k5, mcs(k5)).cliques == ((0, 1, 2, 3, 4),)
    t = random_tree(SplitMix64(2), 9)
    assert sorted(maximal_cliques_chordal(t, mcs(t)).cliques) == sorted(t.edges)
    cliques = maximal_cliques_chordal(four_triangles, mcs(four_triangles))
    assert sorted(cliques.cliques) == [(0, 1, 2), (0, 1, 3), (0, 2, 5), (1, 2, 4)]
    with pytest.raises(NotPESError):
        maximal_cliques_chordal(cycle_graph(4), mcs(cycle_graph(4)))


@given(chordal_graphs(max_n=11))
def test_maximal_clique_count_is_at_most_n(g):
    cliques = maximal_cliques_chordal(g, mcs(g)).cliques
    assert len(cliques) <= max(g.n, 0)
    assert (len(cliques) == g.n) == (g.m == 0)
    sets = [set(c) for c in cliques]
    assert all(g.is_clique(c) for c in cliques)
    assert not any(a < b for a in sets for b in sets)


@given(chordal_graphs(max_n=11))
def test_coloring_and_stable_set_are_optimal(g):
    sigma = mcs(g)
    col = colors_chordal(g, sigma)
    chi, _ = oracle.exact_chromatic_number(g)
    assert col.color_count == chi == maximal_cliques_chordal(g, sigma).max_size()
    assert all(col.assignment[u] != col.assignment[v] for u, v in g.edges)
    assert colors_count(g, sigma) == chi
    res = gavril_stable_set(g, sigma)
    alpha, _ = oracle.exact_max_stable_set(g)
    assert len(res.stable_set) == alpha == len(res.clique_cover)
    assert g.is_stable(res.stable_set)
    covered = sorted(v for c in res.clique_cover for v in c)
    assert covered == list(range(g.n))
    assert all(g.is_clique(c) for c in res.clique_cover)


def test_coloring_and_stable_set_examples():
    assert colors_chordal(complete_graph(4), mcs(complete_graph(4))).color_count == 4
    t = random_tree(SplitMix64(9), 7)
    assert colors_chordal(t, mcs(t)).color_count == 2
    p5 = path_graph(5)
    assert len(gavril_stable_set(p5, mcs(p5)).stable_set) == 3
    k4 = complete_graph(4)
    res = gavril_stable_set(k4, mcs(k4))
    assert len(res.stable_set) == 1 and res.clique_cover.cliques == ((0, 1, 2, 3),)


def test_fill_in_examples():
    assert fill_in(sun(5)).added_edges == ()
    assert len(fill_in(cycle_graph(4)).added_edges) == 1
    assert len(fill_in(cycle_graph(5)).added_edges) == 2


def _minimum_fill_in(g: Graph) -> int:
    missing = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)]
    for size in range(len(missing) + 1):
        for extra in combinations(missing, size):
            if is_chordal(Graph(g.n, list(g.edges) + list(extra))):
                return size
    raise AssertionError("complete graph is chordal")


@given(graphs(max_n=6))
def test_fill_in_is_a_chordal_supergraph(g):
    res = fill_in(g)
    assert is_chordal(res.supergraph)
    assert not set(res.added_edges) & set(g.edges)
    assert set(g.edges) <= set(res.supergraph.edges)
    assert len(res.added_edges) >= _minimum_fill_in(g)


def test_disconnected_inputs_work_per_component():
    g = Graph(7, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (5, 6), (6, 3)])
    assert not is_chordal(g)
    h = Graph(6, [(0, 1), (1, 2), (3, 4)])
    assert is_chordal(h)
    assert colors_chordal(h, mcs(h)).color_count == 2
