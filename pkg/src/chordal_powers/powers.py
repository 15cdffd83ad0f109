"""Graph powers, the power of chordality, and per-power parameter profiles."""

from __future__ import annotations

from dataclasses import dataclass, field
from . import exact
from .budget import OracleBudget
from .chordal import (
    NotChordalError,
    VertexOrdering,
    colors_chordal,
    is_chordal_masks,
    is_pes_masks,
    later_neighbor_masks,
    maximal_cliques_chordal,
    mcs_order,
)
from .graph import Graph, GraphError, bits_to_tuple, iter_bits, mask_of


def _check_k(k: int) -> None:
    if k < 1:
        raise GraphError(f"power must be at least 1, got {k}")


def k_neighborhood(g: Graph, v: int, k: int) -> tuple[int, ...]:
    """Vertices other than ``v`` within distance ``k``, by frontier expansion."""
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for n={g.n}")
    _check_k(k)
    return bits_to_tuple(_ball(g.masks, v, k) & ~(1 << v))


def _ball(masks, v: int, k: int) -> int:
    seen = 1 << v
    frontier = seen
    for _ in range(k):
        reach = 0
        for x in iter_bits(frontier):
            reach |= masks[x]
        frontier = reach & ~seen
        if not frontier:
            break
        seen |= frontier
    return seen


def power_masks(masks, k: int) -> list[int]:
    return [_ball(masks, v, k) & ~(1 << v) for v in range(len(masks))]


def graph_power(g: Graph, k: int) -> Graph:
    """``G^k``: same vertices, ``uv`` an edge iff ``1 <= dist(u, v) <= k``."""
    _check_k(k)
    if k == 1:
        return g
    return Graph.from_masks(power_masks(g.masks, k))


class DistanceTable:
    """All-pairs BFS distances, computed once; powers are thresholds of it."""

    def __init__(self, g: Graph) -> None:
        self.n = g.n
        self.layers: list[list[int]] = []  # layers[v][d]: vertices at distance d from v
        for v in range(g.n):
            seen = 1 << v
            frontier = seen
            rows = [frontier]
            while True:
                reach = 0
                for x in iter_bits(frontier):
                    reach |= g.masks[x]
                frontier = reach & ~seen
                if not frontier:
                    break
                seen |= frontier
                rows.append(frontier)
            self.layers.append(rows)

    def eccentricity(self, v: int) -> int:
        return len(self.layers[v]) - 1

    def diameter(self) -> int:
        return max((len(r) - 1 for r in self.layers), default=0)

    def power_masks(self, k: int) -> list[int]:
        out = []
        for rows in self.layers:
            m = 0
            for d in range(1, min(k, len(rows) - 1) + 1):
                m |= rows[d]
            out.append(m)
        return out


@dataclass(frozen=True)
class ChordalPower:
    k0: int
    chordal_power: Graph
    pes: VertexOrdering


def power_of_chordality(g: Graph, incremental: bool = False) -> ChordalPower:
    """Smallest ``k`` with ``G^k`` chordal, that power, and a PES of it.

    By default every power is computed from scratch, one per ``k``.  With
    ``incremental`` the distances are computed once and thresholded.
    """
    table = DistanceTable(g) if incremental else None
    k = 1
    while True:
        masks = table.power_masks(k) if table else (list(g.masks) if k == 1 else power_masks(g.masks, k))
        sigma = mcs_order(masks)
        if is_pes_masks(masks, sigma):
            return ChordalPower(k, Graph.from_masks(masks), VertexOrdering.from_sequence(sigma))
        k += 1
        if k > max(g.n, 1):
            raise AssertionError("no chordal power found below n; distances are inconsistent")


def k_pes(g: Graph, k: int, first: int | None = None) -> VertexOrdering | None:
    """A PES of ``G^k`` (a weak k-strong PES of ``G``), or ``None`` if ``G^k``
    is not chordal.

    With ``first`` the ordering starts at that vertex when it is simplicial in
    ``G^k``; ``None`` is returned when it is not.
    """
    _check_k(k)
    masks = power_masks(g.masks, k) if k > 1 else list(g.masks)
    if first is None:
        sigma = mcs_order(masks)
        return VertexOrdering.from_sequence(sigma) if is_pes_masks(masks, sigma) else None
    nb = masks[first]
    if any((nb & ~(1 << w)) & ~masks[w] for w in iter_bits(nb)):
        return None
    rest = [v for v in range(g.n) if v != first]
    pos = {v: i for i, v in enumerate(rest)}
    sub = [mask_of(pos[w] for w in iter_bits(masks[v] & ~(1 << first))) for v in rest]
    tail = mcs_order(sub)
    if not is_pes_masks(sub, tail):
        return None
    sigma = [first] + [rest[i] for i in tail]
    if not is_pes_masks(masks, sigma):
        raise AssertionError("prefixing a simplicial vertex broke the elimination scheme")
    return VertexOrdering.from_sequence(sigma)


# parameter bounds from the maximum degree


def degree_power_bound(max_deg: int, k: int) -> int:
    """``chi(G^k) <= Delta^k + 1``."""
    return max_deg ** k + 1


def moore_bound(max_deg: int, k: int) -> int:
    """``chi(G^k) <= 1 + Delta * sum_{i<k} (Delta - 1)^i``: the ball-size count
    behind the ``Delta^k + 1`` bound, never larger than it."""
    return 1 + sum(max_deg * (max_deg - 1) ** i for i in range(k))


EXACT = "exact"
LOWER = "lower-bound"
UPPER = "upper-bound"
CONJECTURED = "conjectured"


@dataclass(frozen=True)
class Bounded:
    """A parameter value, or an interval when it could not be pinned down."""

    lower: int
    upper: int
    source: str

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    @property
    def value(self) -> int | None:
        return self.lower if self.exact else None

    def as_dict(self) -> dict:
        if self.exact:
            return {"value": self.lower, "tag": EXACT, "source": self.source}
        return {
            "lower": {"value": self.lower, "tag": LOWER},
            "upper": {"value": self.upper, "tag": UPPER},
            "source": self.source,
        }


@dataclass(frozen=True)
class PowerRow:
    k: int
    edges: int
    chordal: bool
    complete_components: bool
    omega: Bounded
    chi: Bounded


@dataclass(frozen=True)
class PowerProfile:
    base: Graph
    rows: tuple[PowerRow, ...]
    k0: int
    diameter: int
    truncated: bool = field(default=False)

    def row(self, k: int) -> PowerRow:
        return self.rows[k - 1]


def _components_complete(masks) -> bool:
    for v, m in enumerate(masks):
        comp_rest = m
        # in a graph whose components are cliques, every neighbor sees all other neighbors
        for w in iter_bits(m):
            if (comp_rest | (1 << v)) & ~(masks[w] | (1 << w)):
                return False
    return True


def power_profile(g: Graph, k_max: int | None = None, budget: OracleBudget | None = None) -> PowerProfile:
    """ω and χ of ``G^k`` for ``k = 1 .. min(k_max, dm(G))``.

    Chordal powers are solved exactly through a PES.  Other powers are solved
    by the exact solvers within budget and otherwise get an interval from the
    neighboring chordal powers, the clique search inside a higher chordal
    power, degree bounds and a greedy coloring.
    """
    budget = budget or OracleBudget.from_env()
    table = DistanceTable(g)
    dm = table.diameter()
    top = max(dm, 1)
    last = top if k_max is None else max(1, min(k_max, top))
    max_deg = g.max_degree()

    masks_by_k: dict[int, list[int]] = {}
    chordal_flags: dict[int, bool] = {}
    for k in range(1, top + 1):
        masks_by_k[k] = table.power_masks(k)
        chordal_flags[k] = is_chordal_masks(masks_by_k[k])
    k0 = min(k for k in chordal_flags if chordal_flags[k])

    exact_vals: dict[int, tuple[int, int]] = {}
    for k in range(1, top + 1):
        if chordal_flags[k]:
            h = Graph.from_masks(masks_by_k[k])
            sigma = VertexOrdering.from_sequence(mcs_order(h.masks))
            omega = maximal_cliques_chordal(h, sigma).max_size()
            chi = colors_chordal(h, sigma).color_count
            exact_vals[k] = (omega, chi)

    rows = []
    for k in range(1, last + 1):
        masks = masks_by_k[k]
        edges = sum(m.bit_count() for m in masks) // 2
        if chordal_flags[k]:
            omega, chi = exact_vals[k]
            rows.append(PowerRow(k, edges, True, _components_complete(masks),
                                 Bounded(omega, omega, "chordal"), Bounded(chi, chi, "chordal")))
            continue
        omega_b = _omega_nonchordal(g, masks, k, chordal_flags, exact_vals, budget)
        chi_b = _chi_nonchordal(masks, k, omega_b, exact_vals, max_deg, budget)
        rows.append(PowerRow(k, edges, False, _components_complete(masks), omega_b, chi_b))
    return PowerProfile(g, tuple(rows), k0, dm, truncated=last < top)


def _omega_nonchordal(g, masks, k, flags, exact_vals, budget) -> Bounded:
    if len(masks) <= budget.clique:
        c = exact.max_clique_mask(masks).bit_count()
        return Bounded(c, c, "exact-solver")
    higher = [j for j in sorted(exact_vals) if j > k]
    if higher:
        size, _ = clique_number_via_chordal_power(g, k, higher[0])
        return Bounded(size, size, f"bags of chordal power {higher[0]}")
    lower = max([exact_vals[j][0] for j in exact_vals if j < k] + [1 if masks else 0])
    upper = max(m.bit_count() for m in masks) + 1
    return Bounded(lower, upper, "monotonicity and degree")


def _chi_nonchordal(masks, k, omega_b, exact_vals, max_deg, budget) -> Bounded:
    if len(masks) <= budget.chi:
        c, _ = exact.chromatic_number(masks, budget)
        return Bounded(c, c, "exact-solver")
    lower = omega_b.lower
    upper = min(
        max(exact.greedy_coloring(masks), default=0),
        moore_bound(max_deg, k),
        min([exact_vals[j][1] for j in exact_vals if j > k] or [len(masks)]),
    )
    return Bounded(lower, max(lower, upper), "clique lower bound, greedy and degree upper bounds")


def clique_number_via_chordal_power(g: Graph, k_prime: int, k: int) -> tuple[int, tuple[int, ...]]:
    """``omega(G^{k'})`` for ``k' <= k`` with ``G^k`` chordal.

    Each maximal clique of ``G^{k'}`` lies inside the PES bag ``X_i + v_i``
    of its earliest vertex, so only those bags are searched.
    """
    _check_k(k_prime)
    if k_prime > k:
        raise GraphError("k' must not exceed k")
    big = power_masks(g.masks, k) if k > 1 else list(g.masks)
    sigma = mcs_order(big)
    if not is_pes_masks(big, sigma):
        raise NotChordalError(f"G^{k} is not chordal")
    small = power_masks(g.masks, k_prime) if k_prime > 1 else list(g.masks)
    host = Graph.from_masks(big)
    ordering = VertexOrdering.from_sequence(sigma)
    bags = later_neighbor_masks(host, ordering)
    best = 0
    for v in sigma:
        # cliques of G^{k'} whose earliest vertex is v live in v's bag
        cand = bags[v] & small[v]
        if cand.bit_count() + 1 <= best.bit_count():
            continue
        members = bits_to_tuple(cand)
        pos = {w: i for i, w in enumerate(members)}
        sub = [mask_of(pos[x] for x in iter_bits(small[w] & cand)) for w in members]
        inner = exact.max_clique_mask(sub)
        clique = (1 << v) | mask_of(members[i] for i in iter_bits(inner))
        if clique.bit_count() > best.bit_count():
            best = clique
    return best.bit_count(), bits_to_tuple(best)


# independent checks of facts about powers


def complete_square_by_paths(g: Graph) -> bool:
    """Every induced path on 4 vertices has a vertex outside it adjacent to both ends."""
    masks = g.masks
    for b in range(g.n):
        for c in iter_bits(masks[b]):
            for a in iter_bits(masks[b] & ~masks[c] & ~(1 << c)):
                for d in iter_bits(masks[c] & ~masks[b] & ~(1 << b) & ~masks[a] & ~(1 << a)):
                    common = masks[a] & masks[d] & ~((1 << a) | (1 << b) | (1 << c) | (1 << d))
                    if not common:
                        return False
    return True


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def components_complete(g: Graph) -> bool:
    return _components_complete(g.masks)
