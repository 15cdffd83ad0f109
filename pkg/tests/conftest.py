from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from chordal_powers.generators import random_chordal
from chordal_powers.graph import Graph
from chordal_powers.rng import SplitMix64

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@st.composite
def graphs(draw: st.DrawFn, min_n: int = 0, max_n: int = 9) -> Graph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [p for p, keep in zip(pairs, chosen) if keep])


@st.composite
def chordal_graphs(draw: st.DrawFn, min_n: int = 1, max_n: int = 10) -> Graph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    seed = draw(st.integers(min_value=0, max_value=2**32))
    return random_chordal(SplitMix64(seed), n)


def named(n: int, names: str, edges: str) -> Graph:
    """Graph from space-separated ``ab`` vertex-name pairs; vertex ``i`` is the
    i-th whitespace token of ``names``."""
    idx = {v: i for i, v in enumerate(names.split())}
    return Graph(n, [(idx[a], idx[b]) for a, b in (e.split("-") for e in edges.split())])


@pytest.fixture
def four_triangles() -> Graph:
    """Triangle abc with a triangle glued on each side: cliques abc, abd, bce, acf."""
    return named(6, "a b c d e f", "a-b b-c a-c a-d b-d b-e c-e a-f c-f")


@pytest.fixture
def chorded_square_sunflower() -> Graph:
    """u1..u4 = 0..3 on a 4-cycle w1..w4 = 4..7 with chord w2w4; u_i sees
    w_{i-1}, w_i (u1 sees w4, w1)."""
    return Graph(8, [(0, 4), (0, 7), (1, 4), (1, 5), (2, 5), (2, 6), (3, 6), (3, 7),
                     (4, 5), (5, 6), (6, 7), (7, 4), (5, 7)])


@pytest.fixture
def suspended_sunflower() -> Graph:
    """A size-4 sunflower over a clique w1..w4 (5..8) with petals v2, v4, v3,
    v5 (1..4), plus an apex v1 (0) joined to the opposite petals v4 and v5."""
    names = "v1 v2 v3 v4 v5 v6 v7 v8 v9"
    edges = ("v6-v7 v6-v8 v6-v9 v7-v8 v7-v9 v8-v9 v2-v6 v2-v9 v4-v6 v4-v7 "
             "v3-v7 v3-v8 v5-v8 v5-v9 v1-v4 v1-v5")
    return named(9, names, edges)


@pytest.fixture
def sun_with_two_chords() -> Graph:
    """Five petals u1..u5 (0..4) on a 5-cycle w1..w5 (5..9) with chords w2w4, w4w1."""
    u = range(5)
    w = [5 + i for i in range(5)]
    edges = [(u[0], w[0]), (u[0], w[4])] + [(u[i], w[i - 1]) for i in range(1, 5)] + [(u[i], w[i]) for i in range(1, 5)]
    edges += [(w[i], w[(i + 1) % 5]) for i in range(5)] + [(w[1], w[3]), (w[3], w[0])]
    return Graph(10, edges)
