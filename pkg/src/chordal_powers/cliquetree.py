"""Clique graphs, clique trees and tree decompositions of chordal graphs."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .chordal import CliqueSet, NotChordalError, VertexOrdering, maximal_cliques_chordal, mcs, verify_pes
from .graph import Graph, bits_to_tuple, iter_bits, mask_of


@dataclass(frozen=True)
class CliqueGraphEdge:
    i: int
    j: int
    separator: tuple[int, ...]

    @property
    def weight(self) -> int:
        return len(self.separator)


@dataclass(frozen=True)
class CliqueGraph:
    nodes: CliqueSet
    edges: tuple[CliqueGraphEdge, ...]


@dataclass(frozen=True)
class CliqueTree:
    """Bags plus tree edges.  On a disconnected host this is a forest with
    one tree per component."""

    nodes: CliqueSet
    edges: tuple[tuple[int, int], ...]

    @property
    def width(self) -> int:
        return self.nodes.max_size() - 1

    @property
    def weight(self) -> int:
        return sum(len(set(self.nodes.cliques[i]) & set(self.nodes.cliques[j])) for i, j in self.edges)

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True)

    def as_dict(self) -> dict:
        return {
            "bags": [sorted(c) for c in self.nodes.cliques],
            "edges": [list(e) for e in self.edges],
            "width": self.width,
        }

    def to_dot(self) -> str:
        lines = ["graph clique_tree {"]
        for i, c in enumerate(self.nodes.cliques):
            label = " ".join(str(v) for v in sorted(c))
            lines.append(f'  b{i} [label="{label}"];')
        for i, j in self.edges:
            lines.append(f"  b{i} -- b{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _reach(g: Graph, start: int, removed: int) -> int:
    seen = 1 << start
    stack = [start]
    while stack:
        v = stack.pop()
        for w in iter_bits(g.masks[v] & ~removed & ~seen):
            seen |= 1 << w
            stack.append(w)
    return seen


def _separates(g: Graph, s: int, a: int, b: int) -> bool:
    return not (_reach(g, a, s) >> b & 1)


def is_minimal_separator(g: Graph, s: Sequence[int], a: int, b: int) -> bool:
    """``S`` separates ``a`` from ``b`` and no proper subset of it does.

    Separation is monotone under adding vertices, so removing single
    vertices is enough to test minimality.
    """
    sm = mask_of(s)
    if sm >> a & 1 or sm >> b & 1 or not _separates(g, sm, a, b):
        return False
    return all(not _separates(g, sm & ~(1 << x), a, b) for x in s)


def _chordal_cliques(g: Graph) -> CliqueSet:
    sigma = mcs(g)
    if not verify_pes(g, sigma):
        raise NotChordalError("clique graphs are only built for chordal graphs")
    return maximal_cliques_chordal(g, sigma)


def clique_graph(g: Graph) -> CliqueGraph:
    """Maximal cliques, joined when their intersection is a minimal separator
    for every choice of ``a`` in one side and ``b`` in the other."""
    cliques = _chordal_cliques(g)
    edges = []
    cs = [set(c) for c in cliques.cliques]
    for i in range(len(cs)):
        for j in range(i + 1, len(cs)):
            s = sorted(cs[i] & cs[j])
            if not s:
                continue
            if all(is_minimal_separator(g, s, a, b) for a in cs[i] - cs[j] for b in cs[j] - cs[i]):
                edges.append(CliqueGraphEdge(i, j, tuple(s)))
    return CliqueGraph(cliques, tuple(edges))


def max_spanning_tree(cg: CliqueGraph) -> CliqueTree:
    """Kruskal; heavier first, ties by clique index pair."""
    parent = list(range(len(cg.nodes)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    chosen = []
    for e in sorted(cg.edges, key=lambda e: (-e.weight, e.i, e.j)):
        ri, rj = find(e.i), find(e.j)
        if ri != rj:
            parent[ri] = rj
            chosen.append((e.i, e.j))
    return CliqueTree(cg.nodes, tuple(chosen))


@dataclass(frozen=True)
class MCCTResult:
    chordal: bool
    ordering: VertexOrdering
    tree: CliqueTree | None


def mcct(g: Graph) -> MCCTResult:
    """One maximum cardinality search that also assembles a clique tree.

    A new bag starts whenever the label of the chosen vertex fails to exceed
    the previous one; it holds the vertex and its numbered neighbors, and
    hangs off the bag of the most recently numbered of those neighbors.
    """
    n = g.n
    masks = g.masks
    label = [0] * n
    unnumbered = (1 << n) - 1
    sigma = [0] * n
    bag_of = [-1] * n
    bags: list[int] = []
    edges: list[tuple[int, int]] = []
    numbered_at = [-1] * n  # step at which each vertex was numbered
    prev = -1
    for step, i in enumerate(range(n - 1, -1, -1)):
        pick = max(iter_bits(unnumbered), key=lambda v: (label[v], -v))
        numbered = masks[pick] & ~unnumbered
        if label[pick] <= prev or not bags:
            bags.append(numbered | (1 << pick))
            if numbered:
                last = max(iter_bits(numbered), key=lambda w: numbered_at[w])
                edges.append((bag_of[last], len(bags) - 1))
        else:
            bags[-1] |= 1 << pick
        bag_of[pick] = len(bags) - 1
        prev = label[pick]
        sigma[i] = pick
        numbered_at[pick] = step
        unnumbered &= ~(1 << pick)
        for w in iter_bits(masks[pick] & unnumbered):
            label[w] += 1
    ordering = VertexOrdering.from_sequence(sigma)
    if not verify_pes(g, ordering):
        return MCCTResult(False, ordering, None)
    tree = CliqueTree(CliqueSet(tuple(bits_to_tuple(b) for b in bags)), tuple(edges))
    return MCCTResult(True, ordering, tree)


def treewidth_chordal(g: Graph) -> tuple[int, CliqueTree]:
    """Treewidth of a chordal graph, ``omega - 1``, with a clique tree as certificate."""
    res = mcct(g)
    if not res.chordal:
        raise NotChordalError("treewidth is only computed exactly for chordal graphs")
    assert res.tree is not None
    return res.tree.width, res.tree


def validate_tree_decomposition(g: Graph, t: CliqueTree) -> bool:
    """Every vertex and every edge lies in some bag, and the bags holding any
    one vertex are connected in the tree.  The edge set must be a forest over
    the bags (a forest can always be joined into a tree)."""
    bags = [mask_of(c) for c in t.nodes.cliques]
    k = len(bags)
    if any(not 0 <= i < k or not 0 <= j < k or i == j for i, j in t.edges):
        return False
    parent = list(range(k))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in t.edges:
        ri, rj = find(i), find(j)
        if ri == rj:
            return False
        parent[ri] = rj

    covered = 0
    for b in bags:
        covered |= b
    if g.n and covered != (1 << g.n) - 1:
        return False
    if covered >> g.n:
        return False
    for u, v in g.edges:
        pair = (1 << u) | (1 << v)
        if not any(b & pair == pair for b in bags):
            return False
    adj: list[list[int]] = [[] for _ in range(k)]
    for i, j in t.edges:
        adj[i].append(j)
        adj[j].append(i)
    for v in range(g.n):
        holding = [i for i in range(k) if bags[i] >> v & 1]
        seen = {holding[0]}
        stack = [holding[0]]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen and bags[y] >> v & 1:
                    seen.add(y)
                    stack.append(y)
        if len(seen) != len(holding):
            return False
    return True
