"""Brute-force ground truth.

Everything here works from the edge list of the input using plain Python
sets and textbook search.  Nothing is imported from the algorithmic modules;
keeping the two routes separate is what makes agreement between them mean
something.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .budget import BudgetExceeded, OracleBudget
from .graph import Graph

__all__ = ["BudgetExceeded", "OracleBudget"]


def _adj(g: Graph) -> list[set[int]]:
    adj: list[set[int]] = [set() for _ in range(g.n)]
    for u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def _check(n: int, limit: int, what: str) -> None:
    if n > limit:
        raise BudgetExceeded(f"{what} oracle budget is n <= {limit}, got n = {n}")


def _budget(budget: OracleBudget | None) -> OracleBudget:
    return budget if budget is not None else OracleBudget.from_env()


# derived graphs, by definition


def distance_matrix(g: Graph) -> list[list[float]]:
    """All-pairs distances by Floyd-Warshall."""
    inf = float("inf")
    n = g.n
    d = [[0.0 if i == j else inf for j in range(n)] for i in range(n)]
    for u, v in g.edges:
        d[u][v] = d[v][u] = 1.0
    for k in range(n):
        dk = d[k]
        for i in range(n):
            dik = d[i][k]
            if dik == inf:
                continue
            di = d[i]
            for j in range(n):
                if dik + dk[j] < di[j]:
                    di[j] = dik + dk[j]
    return d


def power(g: Graph, k: int) -> Graph:
    d = distance_matrix(g)
    return Graph(g.n, [(i, j) for i, j in combinations(range(g.n), 2) if d[i][j] <= k])


def line_graph_square(g: Graph) -> Graph:
    """Edges ``e`` and ``f`` are adjacent when they meet or one edge joins them."""
    adj = _adj(g)
    es = list(g.edges)
    pairs = []
    for i, j in combinations(range(len(es)), 2):
        a, b = es[i]
        c, d = es[j]
        close = len({a, b, c, d}) < 4 or any(y in adj[x] for x in (a, b) for y in (c, d))
        if close:
            pairs.append((i, j))
    return Graph(len(es), pairs)


def complement(g: Graph) -> Graph:
    adj = _adj(g)
    return Graph(g.n, [(i, j) for i, j in combinations(range(g.n), 2) if j not in adj[i]])


# coloring, cliques, stable sets


def is_proper_coloring(g: Graph, colors: list[int] | tuple[int, ...]) -> bool:
    return len(colors) == g.n and all(colors[u] != colors[v] for u, v in g.edges)


def exact_chromatic_number(g: Graph, budget: OracleBudget | None = None) -> tuple[int, tuple[int, ...]]:
    """Smallest k admitting a proper k-coloring, found by trying k = 1, 2, ..."""
    _check(g.n, _budget(budget).chi, "chromatic number")
    n = g.n
    if n == 0:
        return 0, ()
    adj = _adj(g)
    order = sorted(range(n), key=lambda v: (-len(adj[v]), v))
    for k in range(1, n + 1):
        color = [0] * n

        def place(i: int) -> bool:
            if i == n:
                return True
            v = order[i]
            taken = {color[w] for w in adj[v]}
            highest = max(color[order[j]] for j in range(i)) if i else 0
            # new colors are interchangeable, so only one fresh color is tried
            for c in range(1, min(k, highest + 1) + 1):
                if c not in taken:
                    color[v] = c
                    if place(i + 1):
                        return True
                    color[v] = 0
            return False

        if place(0):
            return k, tuple(color)
    raise AssertionError("unreachable: n colors always suffice")


def _max_clique(adj: list[set[int]]) -> tuple[int, ...]:
    best: list[int] = []

    def extend(current: list[int], candidates: set[int]) -> None:
        nonlocal best
        if len(current) > len(best):
            best = list(current)
        if len(current) + len(candidates) <= len(best):
            return
        for v in sorted(candidates):
            if len(current) + len(candidates) <= len(best):
                return
            current.append(v)
            extend(current, candidates & adj[v])
            current.pop()
            candidates = candidates - {v}

    extend([], set(range(len(adj))))
    return tuple(sorted(best))


def exact_max_clique(g: Graph, budget: OracleBudget | None = None) -> tuple[int, tuple[int, ...]]:
    _check(g.n, _budget(budget).clique, "clique")
    c = _max_clique(_adj(g))
    return len(c), c


def exact_max_stable_set(g: Graph, budget: OracleBudget | None = None) -> tuple[int, tuple[int, ...]]:
    _check(g.n, _budget(budget).stable, "stable set")
    adj = _adj(g)
    co = [set(range(g.n)) - adj[v] - {v} for v in range(g.n)]
    s = _max_clique(co)
    return len(s), s


# induced cycles


def _induced_cycles(adj: list[set[int]], min_len: int, max_len: int, stop_at_first: bool) -> list[tuple[int, ...]]:
    """Chordless cycles, each once: smallest vertex first, then the smaller
    of its two cycle neighbors."""
    n = len(adj)
    found: list[tuple[int, ...]] = []

    def grow(path: list[int], on_path: set[int]) -> bool:
        s = path[0]
        last = path[-1]
        for x in sorted(adj[last]):
            if x <= s or x in on_path:
                continue
            # x may touch only the last vertex among the interior ones
            if any(x in adj[p] for p in path[1:-1]):
                continue
            if len(path) >= 2 and s in adj[x]:
                if path[1] < x and min_len <= len(path) + 1 <= max_len:
                    found.append(tuple(path + [x]))
                    if stop_at_first:
                        return True
                continue
            if len(path) + 1 < max_len:
                path.append(x)
                on_path.add(x)
                if grow(path, on_path):
                    return True
                path.pop()
                on_path.discard(x)
        return False

    for s in range(n):
        if grow([s], {s}):
            break
    return found


def enumerate_induced_cycles(
    g: Graph, min_len: int = 3, max_len: int | None = None, budget: OracleBudget | None = None
) -> list[tuple[int, ...]]:
    """Every chordless cycle with length in ``[min_len, max_len]``, once up to
    rotation and reflection, as a vertex sequence."""
    _check(g.n, _budget(budget).cycles, "induced cycle")
    max_len = g.n if max_len is None else max_len
    return _induced_cycles(_adj(g), max(min_len, 3), max_len, False)


def find_induced_cycle(g: Graph, length: int, budget: OracleBudget | None = None) -> tuple[int, ...] | None:
    _check(g.n, _budget(budget).cycles, "induced cycle")
    hits = _induced_cycles(_adj(g), length, length, True)
    return hits[0] if hits else None


def is_chordal_oracle(g: Graph, budget: OracleBudget | None = None) -> bool:
    """True iff the graph has no chordless cycle of length at least 4."""
    _check(g.n, _budget(budget).cycles, "chordality")
    return not _induced_cycles(_adj(g), 4, g.n, True)


@dataclass(frozen=True)
class HoleReport:
    found: bool
    witness: tuple[int, ...] | None
    odd_found: bool
    odd_witness: tuple[int, ...] | None


def _hole_report(adj: list[set[int]], min_len: int) -> HoleReport:
    cycles = _induced_cycles(adj, min_len, len(adj), False)
    odd = [c for c in cycles if len(c) % 2]
    return HoleReport(bool(cycles), cycles[0] if cycles else None, bool(odd), odd[0] if odd else None)


def has_hole(g: Graph, min_len: int = 5, budget: OracleBudget | None = None) -> HoleReport:
    """Induced cycles of length >= ``min_len`` (5 by default)."""
    _check(g.n, _budget(budget).cycles, "hole")
    return _hole_report(_adj(g), min_len)


def has_antihole(g: Graph, min_len: int = 5, budget: OracleBudget | None = None) -> HoleReport:
    """Induced complements of cycles of length >= ``min_len``.

    The witness lists the vertices in the order of the cycle they form in the
    complement graph.
    """
    _check(g.n, _budget(budget).antihole, "antihole")
    adj = _adj(g)
    co = [set(range(g.n)) - adj[v] - {v} for v in range(g.n)]
    return _hole_report(co, min_len)


# exhaustive enumeration

HARD_CAP = 7


def labeled_pairs(n: int) -> list[tuple[int, int]]:
    """Vertex pairs in the bit order used by :func:`enumerate_labeled_graphs`."""
    return list(combinations(range(n), 2))


def graph_from_code(n: int, code: int) -> Graph:
    """Labeled graph whose edge set is given by the bits of ``code``."""
    pairs = labeled_pairs(n)
    return Graph(n, [p for b, p in enumerate(pairs) if code >> b & 1])


def enumerate_labeled_graphs(n: int, *, allow_seven: bool = False) -> Iterator[Graph]:
    """Every labeled graph on ``n`` vertices exactly once.

    n = 7 (2,097,152 graphs) is only produced with ``allow_seven``; larger n
    is refused outright.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > HARD_CAP:
        raise BudgetExceeded(f"labeled enumeration is capped at n = {HARD_CAP}")
    if n == HARD_CAP and not allow_seven:
        raise BudgetExceeded("n = 7 enumeration requires allow_seven=True")
    pairs = labeled_pairs(n)
    for code in range(1 << len(pairs)):
        yield Graph(n, [p for b, p in enumerate(pairs) if code >> b & 1])
