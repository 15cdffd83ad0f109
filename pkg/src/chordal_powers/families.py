"""Named graph families used throughout tests, demos and the CLI."""

from __future__ import annotations

from itertools import combinations

from .graph import Graph


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    """Path on ``n`` vertices ``0 - 1 - ... - n-1``."""
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with center 0."""
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def double_star(a: int, b: int) -> Graph:
    """Two adjacent centers 0 and 1 carrying ``a - 1`` and ``b - 1`` leaves.

    The central edge has endpoint degrees ``a`` and ``b``.
    """
    edges = [(0, 1)]
    nxt = 2
    for _ in range(a - 1):
        edges.append((0, nxt))
        nxt += 1
    for _ in range(b - 1):
        edges.append((1, nxt))
        nxt += 1
    return Graph(nxt, edges)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def sun(n: int) -> Graph:
    """The n-sun: a complete core ``w_0..w_{n-1}`` (vertices ``0..n-1``) and
    ``u_i = n + i`` adjacent to ``w_{i-1}`` and ``w_i``."""
    if n < 3:
        raise ValueError("a sun needs n >= 3")
    edges = list(combinations(range(n), 2))
    for i in range(n):
        edges.append((n + i, (i - 1) % n))
        edges.append((n + i, i))
    return Graph(2 * n, edges)


def cycle_with_pendants(n: int, attach: list[int] | None = None) -> Graph:
    """Cycle ``0..n-1``; each vertex in ``attach`` (default all) gets one leaf."""
    attach = list(range(n)) if attach is None else attach
    edges = [(i, (i + 1) % n) for i in range(n)]
    for k, v in enumerate(attach):
        edges.append((v, n + k))
    return Graph(n + len(attach), edges)
