from itertools import combinations, product

import pytest
from hypothesis import given

from chordal_powers import exact, oracle
from chordal_powers.budget import BudgetExceeded, OracleBudget
from chordal_powers.families import complete_bipartite, complete_graph, cycle_graph, path_graph, petersen_graph
from chordal_powers.graph import Graph

from conftest import graphs


def _brute_chi(g: Graph) -> int:
    for k in range(0 if g.n == 0 else 1, g.n + 1):
        for colors in product(range(k), repeat=g.n):
            if all(colors[u] != colors[v] for u, v in g.edges):
                return k
    return g.n


def test_exact_values_on_named_graphs():
    assert oracle.exact_chromatic_number(petersen_graph())[0] == 3
    assert oracle.exact_chromatic_number(cycle_graph(7))[0] == 3
    assert oracle.exact_chromatic_number(cycle_graph(8))[0] == 2
    assert oracle.exact_chromatic_number(complete_graph(6))[0] == 6
    assert oracle.exact_chromatic_number(Graph(0))[0] == 0
    assert oracle.exact_max_clique(petersen_graph())[0] == 2
    assert oracle.exact_max_stable_set(petersen_graph())[0] == 4
    assert oracle.exact_max_stable_set(complete_bipartite(3, 5))[0] == 5


@given(graphs(max_n=7))
def test_coloring_matches_exhaustive_assignment(g):
    chi, colors = oracle.exact_chromatic_number(g)
    assert chi == _brute_chi(g)
    assert oracle.is_proper_coloring(g, colors) and len(set(colors)) == chi


@given(graphs(max_n=10))
def test_clique_and_stable_set_are_complementary(g):
    w, clique = oracle.exact_max_clique(g)
    a, stable = oracle.exact_max_stable_set(oracle.complement(g))
    assert w == a and g.is_clique(clique) and len(clique) == w
    assert oracle.complement(g).is_stable(stable)
    best = max((len(s) for r in range(g.n + 1) for s in combinations(range(g.n), r) if g.is_clique(s)), default=0)
    assert w == best


@given(graphs(max_n=10))
def test_production_solvers_match_oracle(g):
    masks = g.masks
    assert len(exact.max_clique(masks)) == oracle.exact_max_clique(g)[0]
    chi, colors = exact.chromatic_number(masks)
    assert chi == oracle.exact_chromatic_number(g)[0]
    assert oracle.is_proper_coloring(g, colors)
    greedy = exact.greedy_coloring(masks)
    assert oracle.is_proper_coloring(g, greedy) and max(greedy, default=0) >= chi


def test_induced_cycle_enumeration():
    assert oracle.enumerate_induced_cycles(cycle_graph(6)) == [(0, 1, 2, 3, 4, 5)]
    assert len(oracle.enumerate_induced_cycles(complete_graph(4))) == 4
    assert oracle.enumerate_induced_cycles(complete_graph(5), 4) == []
    # the Petersen graph has 12 five-cycles and 10 six-cycles, all induced
    pet = oracle.enumerate_induced_cycles(petersen_graph(), 4)
    assert sorted(len(c) for c in pet) == [5] * 12 + [6] * 10
    assert oracle.find_induced_cycle(path_graph(6), 3) is None


@given(graphs(max_n=8))
def test_induced_cycles_really_are_induced(g):
    for c in oracle.enumerate_induced_cycles(g):
        sub = [(u, v) for u, v in g.edges if u in c and v in c]
        assert len(sub) == len(c)
        assert all(g.has_edge(c[i], c[(i + 1) % len(c)]) for i in range(len(c)))


def test_chordality_by_definition():
    assert oracle.is_chordal_oracle(complete_graph(5))
    assert not oracle.is_chordal_oracle(cycle_graph(4))
    assert oracle.is_chordal_oracle(Graph(3))


def test_holes_and_antiholes():
    c7 = cycle_graph(7)
    h = oracle.has_hole(c7)
    assert h.found and h.odd_found and len(h.witness) == 7
    assert not oracle.has_hole(cycle_graph(4)).found
    co = oracle.complement(c7)
    a = oracle.has_antihole(co)
    assert a.found and a.odd_found and len(a.witness) == 7
    assert not oracle.has_hole(co).found
    assert not oracle.has_antihole(cycle_graph(6), min_len=7).found
    # the complement of C_5 is C_5 again
    assert oracle.has_antihole(cycle_graph(5)).found


def test_derived_graphs():
    assert oracle.power(path_graph(4), 2).m == 5
    assert oracle.power(cycle_graph(5), 2) == complete_graph(5)
    assert oracle.line_graph_square(cycle_graph(5)) == complete_graph(5)
    assert oracle.line_graph_square(path_graph(3)) == complete_graph(2)
    d = oracle.distance_matrix(Graph(3, [(0, 1)]))
    assert d[0][1] == 1 and d[0][2] == float("inf")


def test_labeled_enumeration():
    assert sum(1 for _ in oracle.enumerate_labeled_graphs(4)) == 64
    codes = {tuple(g.edges) for g in oracle.enumerate_labeled_graphs(4)}
    assert len(codes) == 64
    assert oracle.graph_from_code(4, 0b111111) == complete_graph(4)
    assert oracle.graph_from_code(3, 0b001).edges == ((0, 1),)
    with pytest.raises(BudgetExceeded):
        next(oracle.enumerate_labeled_graphs(7))
    with pytest.raises(BudgetExceeded):
        next(oracle.enumerate_labeled_graphs(8, allow_seven=True))
    with pytest.raises(ValueError):
        next(oracle.enumerate_labeled_graphs(-1))


def test_budgets_refuse_instead_of_approximating():
    small = OracleBudget(chi=5, clique=5, stable=5, cycles=5, antihole=5)
    big = cycle_graph(6)
    for call in (
        lambda: oracle.exact_chromatic_number(big, small),
        lambda: oracle.exact_max_clique(big, small),
        lambda: oracle.exact_max_stable_set(big, small),
        lambda: oracle.enumerate_induced_cycles(big, budget=small),
        lambda: oracle.is_chordal_oracle(big, small),
        lambda: oracle.has_antihole(big, budget=small),
    ):
        with pytest.raises(BudgetExceeded):
            call()
    with pytest.raises(ValueError):
        OracleBudget(chi=0)


def test_budget_from_environment(monkeypatch):
    monkeypatch.setenv("CHORDAL_POWERS_ORACLE_BUDGET", "9")
    b = OracleBudget.from_env()
    assert b.chi == b.cycles == b.antihole == 9
    monkeypatch.setenv("CHORDAL_POWERS_ORACLE_BUDGET", "chi=18,cycles=16")
    b = OracleBudget.from_env()
    assert (b.chi, b.cycles, b.clique) == (18, 16, 24)
    monkeypatch.setenv("CHORDAL_POWERS_ORACLE_BUDGET", "chi=x")
    with pytest.raises(ValueError):
        OracleBudget.from_env()
