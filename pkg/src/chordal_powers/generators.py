"""Seeded random graphs: G(n, p), random trees, random chordal graphs."""

from __future__ import annotations

from itertools import combinations

from .chordal import is_chordal
from .graph import Graph
from .rng import SplitMix64


def random_graph(rng: SplitMix64, n: int, p: float) -> Graph:
    return Graph(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


def random_tree(rng: SplitMix64, n: int) -> Graph:
    """Uniform labeled tree from a random Pruefer sequence."""
    if n <= 1:
        return Graph(n)
    if n == 2:
        return Graph(2, [(0, 1)])
    seq = [rng.randbelow(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [w for w in range(n) if degree[w] == 1]
    edges.append((u, v))
    return Graph(n, edges)


def random_k_tree(rng: SplitMix64, n: int, k: int) -> Graph:
    """Start from a ``(k+1)``-clique (or ``K_n`` when smaller) and attach each
    new vertex to a random existing ``k``-clique."""
    if n <= k + 1:
        return Graph(n, combinations(range(n), 2))
    edges = list(combinations(range(k + 1), 2))
    kcliques = [c for c in combinations(range(k + 1), k)]
    for v in range(k + 1, n):
        base = rng.choice(kcliques)
        edges.extend((u, v) for u in base)
        for drop in range(k):
            kcliques.append(tuple(sorted(base[:drop] + base[drop + 1:] + (v,))))
    return Graph(n, edges)


def random_chordal(rng: SplitMix64, n: int, k: int | None = None, keep: float | None = None) -> Graph:
    """A random k-tree, then edges removed in random order whenever the rest
    stays chordal, each with probability ``1 - keep``."""
    if k is None:
        k = rng.randint(1, max(1, min(4, n - 1)))
    if keep is None:
        keep = 0.4 + 0.6 * rng.random()
    g = random_k_tree(rng, n, k)
    edges = list(g.edges)
    rng.shuffle(edges)
    current = set(edges)
    for e in edges:
        if rng.random() < keep:
            continue
        trial = current - {e}
        h = Graph(n, sorted(trial))
        if is_chordal(h):
            current = trial
    return Graph(n, sorted(current))
