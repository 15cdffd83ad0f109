"""Distance-k vertex colorings, strong edge colorings and the translations
between strong cliques, anti-matchings and matchings."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from . import exact
from .budget import BudgetExceeded, OracleBudget
from .chordal import (
    VertexOrdering,
    colors_chordal,
    gavril_stable_set,
    is_chordal,
    is_chordal_masks,
    maximal_cliques_chordal,
    mcs_order,
)
from .graph import EdgeId, Graph, GraphError, is_tree, iter_bits, line_graph, mask_of
from .powers import CONJECTURED, Bounded, _check_k, clique_number_via_chordal_power, moore_bound, power_masks

VERTEX = "vertex"
EDGE = "edge"


@dataclass(frozen=True)
class StrongColoring:
    """A k-strong coloring with its color count.

    ``assignment[i]`` is the color (from 1) of vertex ``i``, or of edge
    ``i`` in the graph's edge order for the edge kind.  ``bounds`` is the
    proven interval for the coloring number; ``exact`` means the count is
    optimal.
    """

    kind: str
    k: int
    graph: Graph = field(repr=False)
    assignment: tuple[int, ...]
    color_count: int
    bounds: Bounded

    @property
    def exact(self) -> bool:
        return self.bounds.exact and self.bounds.lower == self.color_count

    def items(self) -> list[tuple[int | EdgeId, int]]:
        if self.kind == VERTEX:
            return list(enumerate(self.assignment))
        return list(zip(self.graph.edge_ids(), self.assignment))

    def as_dict(self) -> dict:
        if self.kind == VERTEX:
            assignment = [{"vertex": v, "color": c} for v, c in enumerate(self.assignment)]
        else:
            assignment = [
                {"edge": list(e.endpoints), "color": c} for e, c in zip(self.graph.edge_ids(), self.assignment)
            ]
        return {
            "kind": self.kind,
            "k": self.k,
            "color_count": self.color_count,
            "exact": self.exact,
            "bounds": self.bounds.as_dict(),
            "assignment": assignment,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True)

    def to_dimacs(self) -> str:
        """``v <vertex> <color>`` lines with 1-based vertices; edges as
        ``e <u> <v> <color>``."""
        lines = [f"c {self.kind} {self.k}-strong coloring, {self.color_count} colors"]
        if self.kind == VERTEX:
            lines += [f"v {v + 1} {c}" for v, c in enumerate(self.assignment)]
        else:
            lines += [f"e {u + 1} {v + 1} {c}" for (u, v), c in zip(self.graph.edges, self.assignment)]
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class AntiMatching:
    """Edges pairwise within line-graph distance ``k``."""

    edges: tuple[EdgeId, ...]
    k: int


@dataclass(frozen=True)
class MatchingResult:
    """Edges pairwise at line-graph distance more than ``k``."""

    edges: tuple[EdgeId, ...]
    k: int


def _greedy(masks: Sequence[int]) -> list[int]:
    return exact.greedy_coloring(masks)


def _color_power(masks: list[int], base_max_deg: int, k: int, budget: OracleBudget, base: Graph | None):
    """Coloring of ``G^k`` given as masks, plus its bounds."""
    n = len(masks)
    if n == 0:
        return [], Bounded(0, 0, "empty")
    if is_chordal_masks(masks):
        h = Graph.from_masks(masks)
        res = colors_chordal(h, VertexOrdering.from_sequence(mcs_order(masks)))
        return list(res.assignment), Bounded(res.color_count, res.color_count, "chordal")
    if n <= budget.chi:
        c, colors = exact.chromatic_number(masks, budget)
        return colors, Bounded(c, c, "exact-solver")
    greedy = _greedy(masks)
    upper = max(greedy)
    if base_max_deg >= 0:
        upper = min(upper, moore_bound(base_max_deg, k))
    lower = 1
    if base is not None:
        higher = _first_chordal_power_above(base, k)
        if higher is not None:
            lower, _ = clique_number_via_chordal_power(base, k, higher)
    if lower == 1 and n <= budget.clique:
        lower = exact.max_clique_mask(masks).bit_count()
    return greedy, Bounded(lower, max(lower, upper), "clique lower bound, greedy and degree upper bounds")


def _first_chordal_power_above(g: Graph, k: int) -> int | None:
    top = max(1, g.n - 1)
    for j in range(k + 1, top + 1):
        if is_chordal_masks(power_masks(g.masks, j)):
            return j
    return None


def k_strong_chromatic_number(g: Graph, k: int, budget: OracleBudget | None = None) -> StrongColoring:
    """``chi_k(G) = chi(G^k)``: exact when ``G^k`` is chordal or small enough
    for the exact solver, otherwise a greedy coloring with bounds."""
    _check_k(k)
    budget = budget or OracleBudget.from_env()
    masks = power_masks(g.masks, k)
    colors, bounds = _color_power(masks, g.max_degree(), k, budget, g)
    result = StrongColoring(VERTEX, k, g, tuple(colors), max(colors, default=0), bounds)
    if not is_valid_strong_coloring(result):
        raise AssertionError("k-strong coloring failed its own validity check")
    return result


def strong_chromatic_index(g: Graph, budget: OracleBudget | None = None) -> StrongColoring:
    """``chi'_2(G) = chi(L(G)^2)`` with a strong edge coloring.

    For chordal ``G`` the square of the line graph is chordal, so the value
    is exact and equals the largest 2-strong anti-matching.
    """
    budget = budget or OracleBudget.from_env()
    lg = line_graph(g).line_graph
    masks = power_masks(lg.masks, 2)
    colors, bounds = _color_power(masks, lg.max_degree(), 2, budget, lg)
    result = StrongColoring(EDGE, 2, g, tuple(colors), max(colors, default=0), bounds)
    if not is_valid_strong_coloring(result):
        raise AssertionError("strong edge coloring failed its own validity check")
    if is_chordal(g):
        if not is_chordal_masks(masks):
            raise AssertionError("the line graph square of a chordal graph came out non-chordal")
        am = max_clique_chordal_masks(masks)
        if result.color_count != am or not result.exact:
            raise AssertionError(f"chordal graph with strong index {result.color_count} but anti-matching {am}")
    return result


def max_clique_chordal_masks(masks: list[int]) -> int:
    h = Graph.from_masks(masks)
    return maximal_cliques_chordal(h, VertexOrdering.from_sequence(mcs_order(masks))).max_size()


def cycle_strong_index(n: int) -> int:
    """Strong chromatic index of ``C_n`` in closed form."""
    if n < 3:
        raise GraphError("cycles have at least 3 vertices")
    if n % 3 == 0:
        return 3
    if n == 5:
        return 5
    return 4


def _edge(g: Graph, e: EdgeId | int | tuple[int, int]) -> EdgeId:
    if isinstance(e, EdgeId):
        if not 0 <= e.index < g.m or g.edges[e.index] != tuple(e.endpoints):
            raise GraphError(f"{e} is not an edge of this graph")
        return e
    if isinstance(e, int):
        if not 0 <= e < g.m:
            raise GraphError(f"edge index {e} out of range")
        return g.edge_id(e)
    u, v = e
    return g.edge_id(g.edge_index(u, v))


def pair_degree(g: Graph, e: EdgeId | int | tuple[int, int]) -> int:
    """``s(xy) = deg(x) + deg(y) - 1``, the number of edges touching ``xy`` counting itself."""
    x, y = _edge(g, e).endpoints
    return g.degree(x) + g.degree(y) - 1


def sigma_max(g: Graph) -> int:
    """Largest pair degree; 0 for an edgeless graph."""
    if g.m == 0:
        return 0
    s = max(pair_degree(g, i) for i in range(g.m))
    lg = line_graph(g).line_graph
    if s != lg.max_degree() + 1:
        raise AssertionError("largest pair degree differs from the line graph's max degree plus one")
    return s


def tree_strong_index(t: Graph, budget: OracleBudget | None = None) -> int:
    """Strong chromatic index of a tree, which is its largest pair degree."""
    if not is_tree(t):
        raise GraphError("tree_strong_index needs a tree")
    s = sigma_max(t)
    via_square = strong_chromatic_index(t, budget).color_count
    if s != via_square:
        raise AssertionError(f"tree with largest pair degree {s} but strong index {via_square}")
    return s


def conjectured_strong_index_bound(max_deg: int) -> Bounded:
    """Upper bound ``5D^2/4`` (even D) or ``(5D^2 - 2D + 1)/4`` (odd D),
    open in general and tagged as a conjecture."""
    if max_deg < 0:
        raise GraphError("max degree must be non-negative")
    d = max_deg
    value = 5 * d * d // 4 if d % 2 == 0 else (5 * d * d - 2 * d + 1) // 4
    return Bounded(0, value, CONJECTURED)


# ---------------------------------------------------------------- validity


def _vertex_distances(g: Graph, limit: int) -> list[int]:
    """Per-vertex mask of the vertices within distance ``limit``, self excluded."""
    return power_masks(g.masks, limit) if limit >= 1 else [0] * g.n


def _edges_near(g: Graph) -> list[int]:
    """For each edge, the mask of edges at line-graph distance exactly 1 or 2,
    derived from endpoints: they share an endpoint or a third edge joins them."""
    ends = g.edges
    out = []
    for i, (a, b) in enumerate(ends):
        close = g.masks[a] | g.masks[b] | (1 << a) | (1 << b)
        m = 0
        for j, (c, d) in enumerate(ends):
            if j != i and (close >> c & 1 or close >> d & 1):
                m |= 1 << j
        out.append(m)
    return out


def _line_distance_masks(g: Graph, k: int) -> list[int]:
    return power_masks(line_graph(g).line_graph.masks, k) if g.m else []


def is_valid_strong_coloring(c: StrongColoring) -> bool:
    """No two distinct items within distance ``k`` share a color."""
    g = c.graph
    if c.kind == VERTEX:
        near = _vertex_distances(g, c.k)
        count = g.n
    elif c.kind == EDGE:
        near = _line_distance_masks(g, c.k)
        count = g.m
    else:
        return False
    if len(c.assignment) != count or any(x < 1 for x in c.assignment):
        return False
    if c.color_count < len(set(c.assignment)):
        return False
    for i in range(count):
        for j in iter_bits(near[i]):
            if j > i and c.assignment[i] == c.assignment[j]:
                return False
    return True


def is_strong_clique(g: Graph, vertices: Iterable[int], k: int) -> bool:
    vs = sorted(set(vertices))
    near = _vertex_distances(g, k)
    return all(near[a] >> b & 1 for a, b in combinations(vs, 2))


def is_anti_matching(g: Graph, edges: Iterable[EdgeId], k: int) -> bool:
    ids = sorted({_edge(g, e).index for e in edges})
    near = _line_distance_masks(g, k)
    return all(near[a] >> b & 1 for a, b in combinations(ids, 2))


def is_strong_matching(g: Graph, edges: Iterable[EdgeId], k: int) -> bool:
    ids = sorted({_edge(g, e).index for e in edges})
    near = _line_distance_masks(g, k)
    return all(not near[a] >> b & 1 for a, b in combinations(ids, 2))


# ---------------------------------------------------------------- translations


def anti_matching_to_clique(g: Graph, a: AntiMatching) -> tuple[int, ...]:
    """Endpoints of a k-strong anti-matching, a (k+1)-strong clique."""
    if not is_anti_matching(g, a.edges, a.k):
        raise GraphError(f"edges are not a {a.k}-strong anti-matching")
    c = tuple(sorted({v for e in a.edges for v in e.endpoints}))
    if not is_strong_clique(g, c, a.k + 1):
        raise AssertionError("endpoints of an anti-matching are not a strong clique one level up")
    return c


def clique_to_anti_matching(g: Graph, c: Sequence[int], k: int) -> AntiMatching:
    """Edges inside a k-strong clique, a (k+1)-strong anti-matching."""
    _check_k(k)
    if not is_strong_clique(g, c, k):
        raise GraphError(f"vertices are not a {k}-strong clique")
    cm = mask_of(c)
    edges = tuple(e for e in g.edge_ids() if cm >> e.endpoints[0] & 1 and cm >> e.endpoints[1] & 1)
    am = AntiMatching(edges, k + 1)
    if not is_anti_matching(g, edges, k + 1):
        raise AssertionError("edges of a strong clique are not an anti-matching one level up")
    return am


def lift_vertex_to_edge_coloring(g: Graph, f: StrongColoring) -> StrongColoring:
    """Color each edge by the pair of its endpoint colors in a 2-strong
    vertex coloring.  At most ``C(colors, 2)`` edge colors come out."""
    if f.kind != VERTEX or f.k != 2 or f.graph != g or not is_valid_strong_coloring(f):
        raise GraphError("lift needs a valid 2-strong vertex coloring of the same graph")
    pairs = [tuple(sorted((f.assignment[u], f.assignment[v]))) for u, v in g.edges]
    dense = {p: i + 1 for i, p in enumerate(sorted(set(pairs)))}
    colors = tuple(dense[p] for p in pairs)
    used = len(dense)
    cap = comb(f.color_count, 2)
    lifted = StrongColoring(EDGE, 2, g, colors, used, Bounded(0, used, "vertex coloring lift"))
    if not is_valid_strong_coloring(lifted):
        raise AssertionError("lifted edge coloring is not a strong edge coloring")
    if used > cap:
        raise AssertionError(f"lift used {used} colors, more than C({f.color_count}, 2) = {cap}")
    return lifted


# ---------------------------------------------------------------- matching numbers


def anti_matching_number(g: Graph, budget: OracleBudget | None = None) -> tuple[int, AntiMatching]:
    """Largest 2-strong anti-matching, from edge adjacency rules rather than
    the line graph square."""
    limit = (budget or OracleBudget.from_env()).clique
    if g.m > limit:
        raise BudgetExceeded(f"anti-matching budget is m <= {limit}, got m = {g.m}")
    near = _edges_near(g)
    best = exact.max_clique_mask(near)
    edges = tuple(g.edge_id(i) for i in iter_bits(best))
    return len(edges), AntiMatching(edges, 2)


def strong_matching_number(g: Graph, budget: OracleBudget | None = None) -> tuple[int, MatchingResult]:
    """Largest 2-strong (induced) matching, same rules, complemented."""
    limit = (budget or OracleBudget.from_env()).stable
    if g.m > limit:
        raise BudgetExceeded(f"matching budget is m <= {limit}, got m = {g.m}")
    near = _edges_near(g)
    full = (1 << g.m) - 1
    far = [full & ~near[i] & ~(1 << i) for i in range(g.m)]
    best = exact.max_clique_mask(far)
    edges = tuple(g.edge_id(i) for i in iter_bits(best))
    return len(edges), MatchingResult(edges, 2)


def anti_matching_cover_number(g: Graph) -> int | None:
    """Fewest 2-strong anti-matchings covering ``E(G)`` when ``L(G)^2`` is
    chordal (a minimum clique cover), else None."""
    if g.m == 0:
        return 0
    masks = power_masks(line_graph(g).line_graph.masks, 2)
    if not is_chordal_masks(masks):
        return None
    h = Graph.from_masks(masks)
    res = gavril_stable_set(h, VertexOrdering.from_sequence(mcs_order(masks)))
    return len(res.clique_cover)
