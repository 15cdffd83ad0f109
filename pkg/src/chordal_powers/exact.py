"""Exact clique and coloring solvers for graphs that are not chordal.

These are the production solvers used when a power is not chordal and the
graph is within budget: a bitset branch and bound for maximum cliques with a
greedy-coloring bound, and DSATUR branch and bound for coloring.  The test
suite checks them against the independent routines in :mod:`oracle`.
"""

from __future__ import annotations

from typing import Sequence

from .budget import BudgetExceeded, OracleBudget
from .graph import iter_bits


def _color_bound(masks: Sequence[int], cand: int) -> list[tuple[int, int]]:
    """Greedy color classes of ``cand``; returns (vertex, class number) pairs
    sorted by class, which bounds any clique through the later vertices."""
    out = []
    k = 0
    rest = cand
    while rest:
        k += 1
        avail = rest
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            out.append((v, k))
            rest &= ~low
            avail &= ~low & ~masks[v]
    return out


def max_clique_mask(masks: Sequence[int]) -> int:
    n = len(masks)
    best = 0
    best_size = 0

    def expand(current: int, size: int, cand: int) -> None:
        nonlocal best, best_size
        order = _color_bound(masks, cand)
        for v, bound in reversed(order):
            if size + bound <= best_size:
                return
            nxt = cand & masks[v]
            if nxt:
                expand(current | (1 << v), size + 1, nxt)
            elif size + 1 > best_size:
                best = current | (1 << v)
                best_size = size + 1
            cand &= ~(1 << v)

    if n:
        expand(0, 0, (1 << n) - 1)
    return best


def max_clique(masks: Sequence[int], budget: OracleBudget | None = None) -> tuple[int, ...]:
    limit = (budget or OracleBudget.from_env()).clique
    if len(masks) > limit:
        raise BudgetExceeded(f"exact clique budget is n <= {limit}, got n = {len(masks)}")
    return tuple(iter_bits(max_clique_mask(masks)))


def greedy_coloring(masks: Sequence[int], order: Sequence[int] | None = None) -> list[int]:
    """First-fit coloring; by default in descending degree order, ties by index."""
    n = len(masks)
    if order is None:
        order = sorted(range(n), key=lambda v: (-masks[v].bit_count(), v))
    color = [0] * n
    for v in order:
        used = 0
        for w in iter_bits(masks[v]):
            used |= 1 << color[w]
        c = 1
        while used >> c & 1:
            c += 1
        color[v] = c
    return color


def chromatic_number(masks: Sequence[int], budget: OracleBudget | None = None) -> tuple[int, list[int]]:
    """Exact chromatic number and an optimal coloring (colors from 1)."""
    n = len(masks)
    limit = (budget or OracleBudget.from_env()).chi
    if n > limit:
        raise BudgetExceeded(f"exact coloring budget is n <= {limit}, got n = {n}")
    if n == 0:
        return 0, []
    clique = list(iter_bits(max_clique_mask(masks)))
    lower = len(clique)
    best = greedy_coloring(masks)
    best_k = max(best)
    if best_k == lower:
        return best_k, best

    color = [0] * n
    nbr_colors = [0] * n  # bitmask of colors present among neighbors
    for i, v in enumerate(clique):
        color[v] = i + 1
    for v in clique:
        for w in iter_bits(masks[v]):
            nbr_colors[w] |= 1 << color[v]
    remaining = [v for v in range(n) if not color[v]]

    def solve(left: int, used: int) -> bool:
        nonlocal best, best_k
        if left == 0:
            best = list(color)
            best_k = used
            return best_k == lower
        # DSATUR choice: most distinct neighbor colors, then most uncolored neighbors
        pick = -1
        key = (-1, -1)
        for v in remaining:
            if color[v]:
                continue
            k = (nbr_colors[v].bit_count(), masks[v].bit_count())
            if k > key:
                key = k
                pick = v
        v = pick
        for c in range(1, min(used + 1, best_k - 1) + 1):
            if nbr_colors[v] >> c & 1:
                continue
            color[v] = c
            touched = []
            for w in iter_bits(masks[v]):
                if not nbr_colors[w] >> c & 1:
                    nbr_colors[w] |= 1 << c
                    touched.append(w)
            if solve(left - 1, max(used, c)):
                return True
            for w in touched:
                nbr_colors[w] &= ~(1 << c)
            color[v] = 0
        return False

    solve(len(remaining), lower)
    return best_k, best
