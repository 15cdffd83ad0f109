"""Chordal graphs, their powers, strong colorings and the structures that
make a square or a line-graph square non-chordal."""

from .budget import BudgetExceeded, OracleBudget
from .chordal import (
    NotChordalError,
    NotPESError,
    VertexOrdering,
    colors_chordal,
    fill_in,
    gavril_stable_set,
    is_chordal,
    lex_bfs,
    maximal_cliques_chordal,
    mcs,
    verify_pes,
)
from .cliquetree import clique_graph, max_spanning_tree, mcct, treewidth_chordal, validate_tree_decomposition
from .formats import ParseError, from_graph6, parse, read_graph, to_graph6
from .graph import EdgeId, Graph, GraphError, complement, diameter, distances_from, induced_subgraph, line_graph
from .powers import graph_power, k_neighborhood, k_pes, power_of_chordality, power_profile
from .strongcolor import (
    StrongColoring,
    cycle_strong_index,
    k_strong_chromatic_number,
    lift_vertex_to_edge_coloring,
    pair_degree,
    sigma_max,
    strong_chromatic_index,
    tree_strong_index,
)
from .structures import (
    find_fertile_sprout,
    find_flower,
    find_sunflower,
    line_square_chordal_verdict,
    line_square_perfection_necessary,
    validate_flower,
    validate_sprout,
    validate_sunflower,
)

__all__ = [name for name in dir() if not name.startswith("_")]
