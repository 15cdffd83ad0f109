import json
from math import comb

import pytest
from hypothesis import given

from chordal_powers import oracle
from chordal_powers.budget import BudgetExceeded, OracleBudget
from chordal_powers.families import complete_graph, cycle_graph, double_star, path_graph, star_graph
from chordal_powers.generators import random_tree
from chordal_powers.graph import EdgeId, Graph, GraphError
from chordal_powers.powers import CONJECTURED
from chordal_powers.rng import SplitMix64
from chordal_powers.strongcolor import (
    EDGE,
    VERTEX,
    AntiMatching,
    StrongColoring,
    anti_matching_cover_number,
    anti_matching_number,
    anti_matching_to_clique,
    clique_to_anti_matching,
    conjectured_strong_index_bound,
    cycle_strong_index,
    is_anti_matching,
    is_strong_clique,
    is_strong_matching,
    is_valid_strong_coloring,
    k_strong_chromatic_number,
    lift_vertex_to_edge_coloring,
    pair_degree,
    sigma_max,
    strong_chromatic_index,
    strong_matching_number,
    tree_strong_index,
)

from conftest import chordal_graphs, graphs

WIDE = OracleBudget(chi=40, clique=40, stable=40)


@pytest.fixture
def chorded_twelve_cycle() -> Graph:
    """C_12 v1..v12 with chords v1v5, v2v10, v3v6, v4v8, v7v11, v9v12; diameter 3."""
    ring = [(i, (i + 1) % 12) for i in range(12)]
    return Graph(12, ring + [(0, 4), (1, 9), (2, 5), (3, 7), (6, 10), (8, 11)])


def _edges(g: Graph, pairs) -> tuple[EdgeId, ...]:
    return tuple(g.edge_id(g.edge_index(u, v)) for u, v in pairs)


def test_k_strong_chromatic_number_examples():
    c = k_strong_chromatic_number(cycle_graph(5), 2)
    assert c.color_count == 5 and c.exact
    c = k_strong_chromatic_number(cycle_graph(6), 2)
    assert c.color_count == 3 and c.exact
    for k in (1, 2, 3):
        assert k_strong_chromatic_number(complete_graph(5), k).color_count == 5
    with pytest.raises(GraphError):
        k_strong_chromatic_number(cycle_graph(5), 0)


def test_large_power_falls_back_to_bounds():
    g = cycle_graph(40)
    c = k_strong_chromatic_number(g, 2, OracleBudget(chi=10))
    assert is_valid_strong_coloring(c)
    assert c.bounds.lower <= 3 <= c.color_count <= c.bounds.upper
    assert c.as_dict()["bounds"]["lower"]["tag"] == "lower-bound"


@given(graphs(max_n=9))
def test_k_strong_coloring_matches_oracle(g):
    for k in (1, 2, 3):
        c = k_strong_chromatic_number(g, k)
        assert is_valid_strong_coloring(c) and c.exact
        assert c.color_count == oracle.exact_chromatic_number(oracle.power(g, k))[0]


def test_strong_index_examples():
    assert strong_chromatic_index(cycle_graph(5)).color_count == 5
    assert [strong_chromatic_index(cycle_graph(n)).color_count for n in (6, 7, 9)] == [3, 4, 3]
    assert strong_chromatic_index(path_graph(4)).color_count == 3
    assert strong_chromatic_index(Graph(3)).color_count == 0


@given(graphs(max_n=8))
def test_strong_index_matches_line_square_oracle(g):
    c = strong_chromatic_index(g, WIDE)
    assert c.kind == EDGE and is_valid_strong_coloring(c)
    want = oracle.exact_chromatic_number(oracle.line_graph_square(g), WIDE)[0]
    assert c.color_count == want


def test_cycle_formula():
    assert [cycle_strong_index(n) for n in (6, 5, 8)] == [3, 5, 4]
    budget = OracleBudget(chi=18, cycles=18)
    for n in range(3, 19):
        want = oracle.exact_chromatic_number(oracle.line_graph_square(cycle_graph(n)), budget)[0]
        assert cycle_strong_index(n) == want
    with pytest.raises(GraphError):
        cycle_strong_index(2)


def test_pair_degree_examples():
    assert pair_degree(complete_graph(2), 0) == 1
    assert all(pair_degree(star_graph(6), i) == 6 for i in range(6))
    assert pair_degree(double_star(2, 3), (0, 1)) == 4
    assert sigma_max(double_star(2, 3)) == 4 and sigma_max(Graph(2)) == 0
    with pytest.raises(GraphError):
        pair_degree(path_graph(3), 5)
    with pytest.raises(GraphError):
        pair_degree(path_graph(3), EdgeId(0, (0, 2)))


def test_tree_index_examples():
    assert tree_strong_index(path_graph(4)) == 3
    assert tree_strong_index(star_graph(5)) == 5
    assert tree_strong_index(complete_graph(2)) == 1
    with pytest.raises(GraphError):
        tree_strong_index(cycle_graph(4))


def test_tree_index_matches_oracle():
    rng = SplitMix64(11)
    for _ in range(40):
        t = random_tree(rng, rng.randint(2, 12))
        want = oracle.exact_chromatic_number(oracle.line_graph_square(t), WIDE)[0]
        assert tree_strong_index(t) == want


def test_conjectured_bound_is_tagged():
    b = conjectured_strong_index_bound(4)
    assert b.upper == 20 and b.source == CONJECTURED
    assert conjectured_strong_index_bound(3).upper == 10
    with pytest.raises(GraphError):
        conjectured_strong_index_bound(-1)


# anti-matchings, cliques and matchings


def test_anti_matching_to_clique_examples():
    c6 = cycle_graph(6)
    a = AntiMatching(_edges(c6, [(0, 1), (2, 3), (4, 5)]), 2)
    assert anti_matching_to_clique(c6, a) == tuple(range(6))
    assert is_strong_clique(c6, range(6), 3)
    k2 = complete_graph(2)
    assert anti_matching_to_clique(k2, AntiMatching(k2.edge_ids(), 1)) == (0, 1)
    p = path_graph(5)  # four edges, outer ends at distance 4
    whole = AntiMatching(p.edge_ids(), 3)
    assert anti_matching_to_clique(p, whole) == tuple(range(5))
    assert is_strong_clique(p, range(5), 4) and not is_strong_clique(p, range(5), 3)
    with pytest.raises(GraphError):
        anti_matching_to_clique(p, AntiMatching(p.edge_ids(), 2))


def test_clique_to_anti_matching_examples(chorded_twelve_cycle):
    k3 = complete_graph(3)
    a = clique_to_anti_matching(k3, [0, 1, 2], 1)
    assert len(a.edges) == 3 and a.k == 2
    w = chorded_twelve_cycle
    a = clique_to_anti_matching(w, list(range(12)), 3)
    assert len(a.edges) == 18
    assert is_anti_matching(w, a.edges, 4) and not is_anti_matching(w, a.edges, 3)
    assert clique_to_anti_matching(Graph(1), [0], 1).edges == ()
    with pytest.raises(GraphError):
        clique_to_anti_matching(path_graph(4), [0, 3], 2)


@given(graphs(max_n=9))
def test_translations_round_trip(g):
    for k in (1, 2):
        _, clique = oracle.exact_max_clique(oracle.power(g, k))
        a = clique_to_anti_matching(g, clique, k)
        assert a.k == k + 1 and is_anti_matching(g, a.edges, k + 1)
        if a.edges:
            assert set(anti_matching_to_clique(g, a)) <= set(clique)
    _, am = anti_matching_number(g)
    if am.edges:
        assert is_strong_clique(g, anti_matching_to_clique(g, am), 3)


def test_matching_examples():
    c6 = cycle_graph(6)
    assert anti_matching_number(c6)[0] == 3
    size, res = strong_matching_number(c6)
    assert size == 2 and is_strong_matching(c6, res.edges, 2)
    assert strong_matching_number(path_graph(2))[0] == 1
    assert is_strong_matching(path_graph(5), _edges(path_graph(5), [(0, 1), (3, 4)]), 2)
    assert not is_strong_matching(path_graph(4), _edges(path_graph(4), [(0, 1), (2, 3)]), 2)
    with pytest.raises(BudgetExceeded):
        anti_matching_number(complete_graph(10), OracleBudget(clique=20))


@given(graphs(max_n=8))
def test_matching_numbers_agree_with_line_square(g):
    sq = oracle.line_graph_square(g)
    am, a = anti_matching_number(g, WIDE)
    nu, mres = strong_matching_number(g, WIDE)
    assert am == oracle.exact_max_clique(sq, WIDE)[0]
    assert nu == oracle.exact_max_stable_set(sq, WIDE)[0]
    assert is_anti_matching(g, a.edges, 2)
    assert is_strong_matching(g, mres.edges, 2)


@given(graphs(max_n=8))
def test_strong_index_bound_chain(g):
    chi2 = strong_chromatic_index(g, WIDE).color_count
    am, _ = anti_matching_number(g, WIDE)
    assert sigma_max(g) <= am <= chi2


@given(chordal_graphs(max_n=12))
def test_chordal_graphs_attain_the_anti_matching_number(g):
    c = strong_chromatic_index(g)
    assert c.exact
    if g.m <= 40:
        assert c.color_count == anti_matching_number(g, WIDE)[0]
    cover = anti_matching_cover_number(g)
    assert cover is not None


@given(graphs(max_n=10))
def test_vertex_chromatic_number_vs_strong_index(g):
    chi = oracle.exact_chromatic_number(g)[0]
    chi2 = strong_chromatic_index(g, WIDE).color_count
    if chi2 >= 3:
        assert chi <= comb(chi2, 2)


def test_pair_bound_needs_three_edge_colors():
    # one or two edge colors are too few for the pair bound on chi
    for g in (complete_graph(2), path_graph(3)):
        chi2 = strong_chromatic_index(g).color_count
        assert oracle.exact_chromatic_number(g)[0] == 2 > comb(chi2, 2)


def test_lift_examples():
    p = path_graph(5)
    f = k_strong_chromatic_number(p, 2)
    assert f.assignment == (1, 2, 3, 1, 2)
    lifted = lift_vertex_to_edge_coloring(p, f)
    assert lifted.color_count == 3 and is_valid_strong_coloring(lifted)
    k2 = complete_graph(2)
    assert lift_vertex_to_edge_coloring(k2, k_strong_chromatic_number(k2, 2)).color_count == 1
    with pytest.raises(GraphError):
        lift_vertex_to_edge_coloring(p, k_strong_chromatic_number(p, 1))
    bad = StrongColoring(VERTEX, 2, p, (1, 1, 1, 1, 1), 1, f.bounds)
    with pytest.raises(GraphError):
        lift_vertex_to_edge_coloring(p, bad)


@given(graphs(max_n=10))
def test_lift_always_gives_a_strong_edge_coloring(g):
    f = k_strong_chromatic_number(g, 2)
    lifted = lift_vertex_to_edge_coloring(g, f)
    assert is_valid_strong_coloring(lifted)
    assert lifted.color_count <= comb(f.color_count, 2)
    assert strong_chromatic_index(g, WIDE).color_count <= lifted.color_count


def test_validity_rejects_bad_colorings():
    c5 = cycle_graph(5)
    good = k_strong_chromatic_number(c5, 2)
    clash = StrongColoring(VERTEX, 2, c5, (1, 2, 1, 3, 4), 4, good.bounds)
    assert not is_valid_strong_coloring(clash)
    short = StrongColoring(VERTEX, 2, c5, (1, 2), 2, good.bounds)
    assert not is_valid_strong_coloring(short)
    assert not is_valid_strong_coloring(StrongColoring("face", 2, c5, good.assignment, 5, good.bounds))


def test_serialization():
    c = strong_chromatic_index(path_graph(4))
    data = json.loads(c.to_json())
    assert data["kind"] == "edge" and data["color_count"] == 3 and data["exact"]
    assert data["assignment"][0] == {"edge": [0, 1], "color": c.assignment[0]}
    dimacs = c.to_dimacs().splitlines()
    assert dimacs[0].startswith("c ") and dimacs[1] == f"e 1 2 {c.assignment[0]}"
    v = k_strong_chromatic_number(cycle_graph(5), 2).to_dimacs().splitlines()
    assert len(v) == 6 and sorted(int(line.split()[2]) for line in v[1:]) == [1, 2, 3, 4, 5]
    assert c.items()[0][0] == EdgeId(0, (0, 1))
