"""Chordality recognition and the classical algorithms on chordal graphs.

Orderings are elimination orders: position 0 is eliminated first.  Both
search procedures number vertices from the back, so the first vertex they
pick ends up in the last position.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph, GraphError, bits_to_tuple, iter_bits


class NotPESError(GraphError):
    """An ordering passed as a perfect elimination scheme is not one."""


class NotChordalError(GraphError):
    """An operation that needs a chordal graph received a non-chordal one."""


@dataclass(frozen=True)
class VertexOrdering:
    sigma: tuple[int, ...]  # position -> vertex
    sigma_inv: tuple[int, ...]  # vertex -> position

    @classmethod
    def from_sequence(cls, order: Iterable[int]) -> "VertexOrdering":
        sigma = tuple(order)
        inv = [-1] * len(sigma)
        for pos, v in enumerate(sigma):
            if not 0 <= v < len(sigma) or inv[v] != -1:
                raise GraphError("ordering is not a permutation of 0..n-1")
            inv[v] = pos
        return cls(sigma, tuple(inv))

    def __len__(self) -> int:
        return len(self.sigma)

    def __iter__(self):
        return iter(self.sigma)

    def position(self, v: int) -> int:
        return self.sigma_inv[v]


@dataclass(frozen=True)
class CliqueSet:
    cliques: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.cliques)

    def __iter__(self):
        return iter(self.cliques)

    def max_size(self) -> int:
        return max((len(c) for c in self.cliques), default=0)


@dataclass(frozen=True)
class ColoringResult:
    assignment: tuple[int, ...]  # vertex -> color, colors start at 1
    color_count: int


@dataclass(frozen=True)
class StableSetResult:
    stable_set: tuple[int, ...]
    clique_cover: CliqueSet


@dataclass(frozen=True)
class FillInResult:
    supergraph: Graph
    added_edges: tuple[tuple[int, int], ...]
    ordering: VertexOrdering


def _as_ordering(g: Graph, sigma: VertexOrdering | Sequence[int]) -> VertexOrdering:
    if not isinstance(sigma, VertexOrdering):
        sigma = VertexOrdering.from_sequence(sigma)
    if len(sigma) != g.n:
        raise GraphError(f"ordering has {len(sigma)} entries, graph has {g.n} vertices")
    return sigma


# orderings


def lex_bfs(g: Graph) -> VertexOrdering:
    """Lexicographic breadth-first search; ties go to the lowest vertex index."""
    n = g.n
    labels: list[list[int]] = [[] for _ in range(n)]
    unnumbered = set(range(n))
    sigma = [0] * n
    for i in range(n - 1, -1, -1):
        v = min(unnumbered, key=lambda x: ([-t for t in labels[x]] + [1], x))
        sigma[i] = v
        unnumbered.discard(v)
        for w in g.adjacency[v]:
            if w in unnumbered:
                labels[w].append(i)
    return VertexOrdering.from_sequence(sigma)


def mcs_order(masks: Sequence[int]) -> list[int]:
    """Maximum cardinality search on raw adjacency masks."""
    n = len(masks)
    label = [0] * n
    unnumbered = (1 << n) - 1
    sigma = [0] * n
    for i in range(n - 1, -1, -1):
        best = -1
        pick = 0
        rest = unnumbered
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            if label[v] > best:
                best = label[v]
                pick = v
            rest ^= low
        sigma[i] = pick
        unnumbered &= ~(1 << pick)
        rest = masks[pick] & unnumbered
        while rest:
            low = rest & -rest
            label[low.bit_length() - 1] += 1
            rest ^= low
    return sigma


def mcs(g: Graph) -> VertexOrdering:
    """Maximum cardinality search; ties go to the lowest vertex index.

    On a disconnected graph each component is numbered contiguously, so the
    result is a concatenation of per-component orders.
    """
    return VertexOrdering.from_sequence(mcs_order(g.masks))


def is_pes_masks(masks: Sequence[int], sigma: Sequence[int]) -> bool:
    """Linear-time perfect elimination check on raw masks.

    Each vertex hands its later neighbors, minus the earliest of them, to
    that earliest neighbor; the order is perfect iff every vertex is adjacent
    to everything it was handed.
    """
    n = len(masks)
    pos = [0] * n
    for i, v in enumerate(sigma):
        pos[v] = i
    owed = [0] * n
    later = (1 << n) - 1
    for v in sigma:
        later &= ~(1 << v)
        x = masks[v] & later
        if x:
            first = -1
            first_pos = n
            rest = x
            while rest:
                low = rest & -rest
                w = low.bit_length() - 1
                if pos[w] < first_pos:
                    first_pos = pos[w]
                    first = w
                rest ^= low
            owed[first] |= x & ~(1 << first)
        if owed[v] & ~masks[v]:
            return False
    return True


def verify_pes(g: Graph, sigma: VertexOrdering | Sequence[int]) -> bool:
    sigma = _as_ordering(g, sigma)
    return is_pes_masks(g.masks, sigma.sigma)


def is_chordal_masks(masks: Sequence[int]) -> bool:
    return is_pes_masks(masks, mcs_order(masks))


def is_chordal(g: Graph) -> bool:
    return is_chordal_masks(g.masks)


def later_neighbor_masks(g: Graph, sigma: VertexOrdering) -> list[int]:
    """``X_v`` for every vertex: neighbors placed after ``v``."""
    later = (1 << g.n) - 1
    out = [0] * g.n
    for v in sigma.sigma:
        later &= ~(1 << v)
        out[v] = g.masks[v] & later
    return out


def _require_pes(g: Graph, sigma: VertexOrdering | Sequence[int]) -> VertexOrdering:
    sigma = _as_ordering(g, sigma)
    if not is_pes_masks(g.masks, sigma.sigma):
        raise NotPESError("ordering is not a perfect elimination scheme of the graph")
    return sigma


# classical algorithms on a PES


def maximal_cliques_chordal(g: Graph, sigma: VertexOrdering | Sequence[int]) -> CliqueSet:
    """All maximal cliques, from the candidates ``X_v + v`` with inclusion filtering."""
    sigma = _require_pes(g, sigma)
    x = later_neighbor_masks(g, sigma)
    cands = [x[v] | (1 << v) for v in sigma.sigma]
    kept = []
    for i, c in enumerate(cands):
        if not any(j != i and c & d == c for j, d in enumerate(cands)):
            kept.append(bits_to_tuple(c))
    return CliqueSet(tuple(kept))


def gavril_stable_set(g: Graph, sigma: VertexOrdering | Sequence[int]) -> StableSetResult:
    """Maximum stable set and a clique cover of the same size.

    Scan the order; every vertex not yet covered joins the stable set and
    covers itself and its later neighbors.
    """
    sigma = _require_pes(g, sigma)
    x = later_neighbor_masks(g, sigma)
    covered = 0
    stable = []
    cover = []
    for v in sigma.sigma:
        if covered >> v & 1:
            continue
        stable.append(v)
        block = (x[v] | (1 << v)) & ~covered
        cover.append(bits_to_tuple(block))
        covered |= block
    return StableSetResult(tuple(stable), CliqueSet(tuple(cover)))


def colors_count(g: Graph, sigma: VertexOrdering) -> int:
    """Chromatic number of a chordal graph from a PES, bookkeeping as in COLORS."""
    if g.n == 0:
        return 0
    chi = 1
    s = [0] * g.n
    later = (1 << g.n) - 1
    for v in sigma.sigma:
        later &= ~(1 << v)
        xs = g.masks[v] & later
        size = xs.bit_count()
        if size == 0:
            continue
        u = max(iter_bits(xs), key=sigma.position)
        s[u] = max(s[u], size - 1)
        if s[v] < size:
            chi = max(chi, size + 1)
    return chi


def colors_chordal(g: Graph, sigma: VertexOrdering | Sequence[int]) -> ColoringResult:
    """Optimal coloring of a chordal graph.

    The count comes from the COLORS bookkeeping; the assignment is greedy in
    reverse elimination order.  The two are required to agree.
    """
    sigma = _require_pes(g, sigma)
    count = colors_count(g, sigma)
    color = [0] * g.n
    for v in reversed(sigma.sigma):
        used = {color[w] for w in g.adjacency[v] if color[w]}
        c = 1
        while c in used:
            c += 1
        color[v] = c
    used_count = max(color, default=0)
    if used_count != count:
        raise AssertionError(f"greedy coloring used {used_count} colors, COLORS reported {count}")
    return ColoringResult(tuple(color), count)


def fill_in(g: Graph) -> FillInResult:
    """Chordal supergraph by playing the elimination game along an MCS order.

    Not a minimum fill-in; that problem is NP-complete.
    """
    sigma = mcs(g)
    masks = list(g.masks)
    added = []
    later = (1 << g.n) - 1
    for v in sigma.sigma:
        later &= ~(1 << v)
        xs = masks[v] & later
        for a in iter_bits(xs):
            missing = xs & ~masks[a] & ~(1 << a)
            for b in iter_bits(missing):
                if a < b:
                    added.append((a, b))
                masks[a] |= 1 << b
                masks[b] |= 1 << a
    h = Graph(g.n, list(g.edges) + added)
    if not verify_pes(h, sigma):
        raise AssertionError("elimination game did not produce a chordal supergraph")
    return FillInResult(h, tuple(added), sigma)
