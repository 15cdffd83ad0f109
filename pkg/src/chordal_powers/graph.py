"""Simple undirected graphs on dense integer vertices.

A :class:`Graph` is immutable.  Adjacency is kept twice: as sorted neighbor
tuples for readable iteration and as Python-int bitmasks, which is what the
hot loops in the other modules use.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence


def iter_bits(x: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``x`` in increasing order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def bits_to_tuple(x: int) -> tuple[int, ...]:
    return tuple(iter_bits(x))


def mask_of(vertices: Iterable[int]) -> int:
    out = 0
    for v in vertices:
        out |= 1 << v
    return out


class EdgeId(NamedTuple):
    """Stable identity of an edge: its index in the edge list and its endpoints."""

    index: int
    endpoints: tuple[int, int]


class GraphError(ValueError):
    """Raised for structurally invalid graph input."""


class Graph:
    """Simple undirected graph with vertices ``0..n-1``.

    Edges keep the order in which they were supplied; ``edges[i]`` is the
    edge with index ``i`` and is stored as ``(min, max)``.
    """

    __slots__ = ("_n", "_edges", "_masks", "_adj", "_index")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        masks = [0] * n
        normalized: list[tuple[int, int]] = []
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if masks[u] >> v & 1:
                raise GraphError(f"duplicate edge ({u}, {v})")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
            normalized.append((u, v) if u < v else (v, u))
        self._n = n
        self._edges = tuple(normalized)
        self._masks = tuple(masks)
        self._adj: tuple[tuple[int, ...], ...] | None = None
        self._index: dict[tuple[int, int], int] | None = None

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> "Graph":
        """Build a graph from symmetric adjacency bitmasks.

        No validation is done; edges are listed in lexicographic order.
        """
        g = cls.__new__(cls)
        n = len(masks)
        edges = []
        for u in range(n):
            higher = masks[u] >> (u + 1)
            while higher:
                low = higher & -higher
                edges.append((u, u + low.bit_length()))
                higher ^= low
        g._n = n
        g._edges = tuple(edges)
        g._masks = tuple(masks)
        g._adj = None
        g._index = None
        return g

    # basic accessors

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    @property
    def masks(self) -> tuple[int, ...]:
        return self._masks

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        if self._adj is None:
            self._adj = tuple(bits_to_tuple(x) for x in self._masks)
        return self._adj

    def vertices(self) -> range:
        return range(self._n)

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self.adjacency[v]

    def mask(self, v: int) -> int:
        return self._masks[v]

    def degree(self, v: int) -> int:
        return self._masks[v].bit_count()

    def degrees(self) -> list[int]:
        return [x.bit_count() for x in self._masks]

    def max_degree(self) -> int:
        return max((x.bit_count() for x in self._masks), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._masks[u] >> v & 1)

    def edge_index(self, u: int, v: int) -> int:
        if self._index is None:
            self._index = {e: i for i, e in enumerate(self._edges)}
        key = (u, v) if u < v else (v, u)
        try:
            return self._index[key]
        except KeyError:
            raise GraphError(f"({u}, {v}) is not an edge") from None

    def edge_id(self, index: int) -> EdgeId:
        if not 0 <= index < len(self._edges):
            raise GraphError(f"edge index {index} out of range")
        return EdgeId(index, self._edges[index])

    def edge_ids(self) -> list[EdgeId]:
        return [EdgeId(i, e) for i, e in enumerate(self._edges)]

    def is_clique(self, vertices: Iterable[int]) -> bool:
        s = mask_of(vertices)
        for v in iter_bits(s):
            if (s & ~(1 << v)) & ~self._masks[v]:
                return False
        return True

    def is_stable(self, vertices: Iterable[int]) -> bool:
        s = mask_of(vertices)
        return all(not (self._masks[v] & s) for v in iter_bits(s))

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self._n:
            raise GraphError(f"vertex {v} out of range for n={self._n}")

    # value semantics: two graphs are equal when they have the same edge set

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._masks == other._masks

    def __hash__(self) -> int:
        return hash(self._masks)

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.m})"


@dataclass(frozen=True)
class LineGraphResult:
    line_graph: Graph
    back_map: tuple[EdgeId, ...]


@dataclass(frozen=True)
class InducedSubgraph:
    graph: Graph
    vertex_map: tuple[int, ...]  # new vertex -> original vertex


def line_graph(g: Graph) -> LineGraphResult:
    """Line graph of ``g``; vertex ``i`` of the result is edge ``i`` of ``g``."""
    incident = [0] * g.n
    for i, (u, v) in enumerate(g.edges):
        incident[u] |= 1 << i
        incident[v] |= 1 << i
    masks = [(incident[u] | incident[v]) & ~(1 << i) for i, (u, v) in enumerate(g.edges)]
    return LineGraphResult(Graph.from_masks(masks), tuple(g.edge_ids()))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph.from_masks([full & ~x & ~(1 << v) for v, x in enumerate(g.masks)])


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> InducedSubgraph:
    """Subgraph induced on ``vertices``, relabeled in increasing vertex order."""
    chosen = sorted(set(vertices))
    for v in chosen:
        g._check_vertex(v)
    pos = {v: i for i, v in enumerate(chosen)}
    sel = mask_of(chosen)
    masks = []
    for v in chosen:
        masks.append(mask_of(pos[w] for w in iter_bits(g.masks[v] & sel)))
    return InducedSubgraph(Graph.from_masks(masks), tuple(chosen))


def distances_from(g: Graph, v: int) -> list[float]:
    """BFS distances from ``v``; unreachable vertices get ``math.inf``."""
    g._check_vertex(v)
    dist: list[float] = [math.inf] * g.n
    dist[v] = 0
    seen = 1 << v
    frontier = 1 << v
    d = 0
    masks = g.masks
    while frontier:
        d += 1
        reach = 0
        for x in iter_bits(frontier):
            reach |= masks[x]
        frontier = reach & ~seen
        seen |= frontier
        for x in iter_bits(frontier):
            dist[x] = d
    return dist


def eccentricity(g: Graph, v: int) -> int:
    """Largest finite distance from ``v`` (its component's eccentricity)."""
    return max(int(d) for d in distances_from(g, v) if d != math.inf)


def diameter(g: Graph) -> int:
    """Maximum distance over pairs in a common component; 0 for n <= 1."""
    return max((eccentricity(g, v) for v in g.vertices()), default=0)


def components(g: Graph) -> list[tuple[int, ...]]:
    """Connected components, each sorted, ordered by smallest vertex."""
    left = (1 << g.n) - 1
    out = []
    masks = g.masks
    while left:
        start = left & -left
        comp = start
        frontier = start
        while frontier:
            reach = 0
            for x in iter_bits(frontier):
                reach |= masks[x]
            frontier = reach & ~comp
            comp |= frontier
        out.append(bits_to_tuple(comp))
        left &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def girth(g: Graph) -> float:
    """Length of a shortest cycle, ``math.inf`` for forests."""
    best = math.inf
    for s in g.vertices():
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            if 2 * dist[x] + 1 >= best:
                break
            for y in g.adjacency[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


def relabel(g: Graph, order: Sequence[int]) -> Graph:
    """Graph with vertex ``order[i]`` renamed to ``i``."""
    pos = {v: i for i, v in enumerate(order)}
    if sorted(pos) != list(range(g.n)):
        raise GraphError("order must be a permutation of the vertices")
    return Graph(g.n, [(pos[u], pos[v]) for u, v in g.edges])
