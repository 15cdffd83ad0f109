import math

import pytest
from hypothesis import given

from chordal_powers import oracle
from chordal_powers.families import complete_graph, cycle_graph, path_graph, petersen_graph, star_graph
from chordal_powers.formats import ParseError, emit, from_graph6, parse, parse_with_labels, to_graph6
from chordal_powers.graph import (
    EdgeId,
    Graph,
    GraphError,
    complement,
    components,
    diameter,
    distances_from,
    girth,
    induced_subgraph,
    is_tree,
    line_graph,
    relabel,
)

from conftest import graphs


def test_constructor_rejects_loops_duplicates_and_range():
    with pytest.raises(GraphError):
        Graph(3, [(1, 1)])
    with pytest.raises(GraphError):
        Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(GraphError):
        Graph(3, [(0, 3)])
    with pytest.raises(GraphError):
        Graph(-1)


def test_edge_ids_follow_input_order():
    g = Graph(4, [(2, 3), (1, 0), (0, 2)])
    assert g.edges == ((2, 3), (0, 1), (0, 2))
    assert g.edge_id(1) == EdgeId(1, (0, 1))
    assert g.edge_index(2, 0) == 2


@given(graphs())
def test_adjacency_is_symmetric_and_matches_edges(g):
    for v in g.vertices():
        assert v not in g.adjacency[v]
        for w in g.adjacency[v]:
            assert v in g.adjacency[w]
    assert sum(len(a) for a in g.adjacency) == 2 * g.m
    assert all(g.has_edge(u, v) for u, v in g.edges)


def test_line_graph_examples():
    assert line_graph(cycle_graph(6)).line_graph.m == 6
    assert all(d == 2 for d in line_graph(cycle_graph(6)).line_graph.degrees())
    claw = line_graph(star_graph(3)).line_graph
    assert claw.n == 3 and claw.m == 3
    p = line_graph(path_graph(4)).line_graph
    assert p.n == 3 and sorted(p.degrees()) == [1, 1, 2]
    assert line_graph(Graph(3)).line_graph.n == 0


@given(graphs())
def test_line_graph_size_identity(g):
    res = line_graph(g)
    lg = res.line_graph
    assert lg.n == g.m
    assert lg.m == sum(d * d for d in g.degrees()) // 2 - g.m
    for i, j in lg.edges:
        assert set(res.back_map[i].endpoints) & set(res.back_map[j].endpoints)


@given(graphs())
def test_complement_is_an_involution(g):
    assert complement(complement(g)) == g
    assert complement(g).m == g.n * (g.n - 1) // 2 - g.m


def test_complement_examples():
    assert complement(complete_graph(4)).m == 0
    assert complement(Graph(4)) == complete_graph(4)
    c5 = complement(cycle_graph(5))
    iso = [0, 2, 4, 1, 3]
    assert all(c5.has_edge(iso[u], iso[v]) for u, v in cycle_graph(5).edges)


def test_distances_examples():
    assert distances_from(path_graph(5), 0) == [0, 1, 2, 3, 4]
    assert distances_from(Graph(2), 0) == [0, math.inf]
    assert sorted(distances_from(cycle_graph(6), 3)) == [0, 1, 1, 2, 2, 3]
    with pytest.raises(GraphError):
        distances_from(path_graph(2), 5)


@given(graphs(max_n=10))
def test_distances_agree_with_floyd_warshall(g):
    d = oracle.distance_matrix(g)
    for v in g.vertices():
        assert distances_from(g, v) == d[v]
    finite = [x for row in d for x in row if x != math.inf]
    assert diameter(g) == int(max(finite, default=0))


def test_diameter_examples():
    assert diameter(complete_graph(5)) == 1
    assert diameter(cycle_graph(6)) == 3
    assert diameter(petersen_graph()) == 2
    assert diameter(Graph(0)) == 0 and diameter(Graph(1)) == 0
    assert diameter(Graph(5, [(0, 1), (2, 3), (3, 4)])) == 2


def test_girth_is_the_shortest_cycle():
    assert girth(cycle_graph(7)) == 7
    assert girth(petersen_graph()) == 5
    assert girth(path_graph(6)) == math.inf
    assert girth(complete_graph(4)) == 3


def test_induced_subgraph_examples():
    c5 = cycle_graph(5)
    sub = induced_subgraph(c5, [0, 1, 2])
    assert sub.graph.m == 2 and sub.vertex_map == (0, 1, 2)
    assert induced_subgraph(c5, range(5)).graph == c5
    # a 4-cycle v1..v4 with an ear on every side; keep v1..v4 and the ear on v1v4
    names = ["u1", "u2", "u3", "u4", "v1", "v2", "v3", "v4"]
    ix = {v: i for i, v in enumerate(names)}
    pairs = [("u1", "v1"), ("u1", "v4"), ("u2", "v1"), ("u2", "v2"), ("u3", "v2"), ("u3", "v3"),
             ("u4", "v3"), ("u4", "v4"), ("v1", "v2"), ("v2", "v3"), ("v3", "v4"), ("v4", "v1")]
    g = Graph(8, [(ix[a], ix[b]) for a, b in pairs])
    h = induced_subgraph(g, [ix[v] for v in ("u1", "v1", "v2", "v3", "v4")])
    back = {h.vertex_map[i]: i for i in range(h.graph.n)}
    assert h.graph.m == 6
    assert h.graph.has_edge(back[ix["v1"]], back[ix["v4"]])
    with pytest.raises(GraphError):
        induced_subgraph(c5, [7])


def test_components_and_trees():
    g = Graph(5, [(0, 1), (3, 4)])
    assert components(g) == [(0, 1), (2,), (3, 4)]
    assert is_tree(path_graph(4)) and not is_tree(cycle_graph(4)) and not is_tree(g)


def test_relabel_rejects_non_permutations():
    with pytest.raises(GraphError):
        relabel(path_graph(3), [0, 0, 1])
    assert relabel(path_graph(3), [1, 0, 2]).edges == ((0, 1), (0, 2))


# formats


def test_graph6_single_vertex():
    assert to_graph6(Graph(1)) == "@"
    assert from_graph6("@") == Graph(1)
    assert to_graph6(Graph(0)) == "?"


@given(graphs(max_n=12))
def test_every_format_round_trips(g):
    for fmt in ("graph6", "dimacs-col", "edge-list"):
        h = parse(emit(g, fmt), fmt)
        assert h.n == g.n and set(h.edges) == set(g.edges)


def test_graph6_of_larger_graphs():
    g = cycle_graph(70)
    assert from_graph6(to_graph6(g)) == g


def test_edge_list_parsing():
    g = parse("0 1\n1 2\n", "edge-list")
    assert g.n == 3 and g.edges == ((0, 1), (1, 2))
    dup = parse("0 1\n1 0\n# comment\n", "edge-list")
    assert dup.m == 1
    labelled = parse_with_labels("a b\nb c\n", "edge-list")
    assert labelled.labels == ("a", "b", "c") and labelled.graph.m == 2
    assert parse("# n 5\n0 1\n", "edge-list").n == 5
    for bad in ("0 1 2\n", "3 3\n", "# n 2\n0 4\n"):
        with pytest.raises(ParseError):
            parse(bad, "edge-list")


def test_dimacs_is_strict():
    assert parse("c hi\np edge 3 2\ne 1 2\ne 2 3\n", "dimacs-col").m == 2
    for bad in ("e 1 2\n", "p edge 2 1\ne 1 1\n", "p edge 2 2\ne 1 2\n", "p edge 2 1\ne 1 3\n",
                "p edge 2 2\ne 1 2\ne 2 1\n", "p edge 2 1\nx 1 2\n"):
        with pytest.raises(ParseError):
            parse(bad, "dimacs-col")


def test_graph6_rejects_malformed_input():
    for bad in ("", "garbage", "A" + chr(20), "C~~"):
        with pytest.raises(ParseError):
            from_graph6(bad)
    with pytest.raises(ParseError):
        parse("0 1", "yaml")
