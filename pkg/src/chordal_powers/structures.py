"""Certificates for induced cycles in ``G^2`` and ``L(G)^2``.

Flowers certify induced cycles of ``G^2``; sunflowers are the special case in
chordal graphs; sprouts are flowers of the line graph written as edges of
``G``.  Flower and sprout searches go through the squares: find an induced
cycle there and read the certificate off the length-2 paths realizing it.
The forbidden-structure matchers work directly on ``G``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Sequence

from . import oracle
from .budget import BudgetExceeded, OracleBudget
from .chordal import NotChordalError, is_chordal, is_chordal_masks
from .graph import EdgeId, Graph, GraphError, bits_to_tuple, induced_subgraph, is_connected, iter_bits, line_graph, mask_of
from .powers import power_masks
from .formats import to_graph6


# induced cycles, on raw masks


def _cycles(masks: Sequence[int], length: int, first_only: bool) -> list[tuple[int, ...]]:
    """Chordless cycles of exactly ``length``, each once: smallest vertex
    first, then the smaller of its two cycle neighbors."""
    n = len(masks)
    found: list[tuple[int, ...]] = []
    if length < 3 or length > n:
        return found
    path = [0] * length

    def grow(k: int, on_path: int, inner: int, higher: int) -> bool:
        s = path[0]
        last = path[k - 1]
        cand = masks[last] & higher & ~on_path & ~inner
        if k == length - 1:
            cand &= masks[s] & ~((1 << (path[1] + 1)) - 1)
        elif k >= 2:
            cand &= ~masks[s]
        for x in iter_bits(cand):
            path[k] = x
            if k == length - 1:
                found.append(tuple(path))
                if first_only:
                    return True
                continue
            nxt_inner = inner | (masks[path[k - 1]] if k >= 2 else 0)
            if grow(k + 1, on_path | (1 << x), nxt_inner, higher):
                return True
        return False

    for s in range(n):
        path[0] = s
        if grow(1, 1 << s, 0, ~((1 << (s + 1)) - 1)):
            break
    return found


def induced_cycles(masks: Sequence[int], length: int) -> list[tuple[int, ...]]:
    return _cycles(masks, length, False)


def smallest_induced_cycle(masks: Sequence[int], length: int) -> tuple[int, ...] | None:
    """The induced cycle of this length whose sorted vertex set is
    lexicographically smallest, as a vertex sequence."""
    cycles = _cycles(masks, length, False)
    if not cycles:
        return None
    return min(cycles, key=lambda c: (sorted(c), c))


def first_induced_cycle(masks: Sequence[int], min_len: int, max_len: int | None = None) -> tuple[int, ...] | None:
    """Any induced cycle with length in range, shortest lengths tried first."""
    top = len(masks) if max_len is None else max_len
    for length in range(max(min_len, 3), top + 1):
        hit = _cycles(masks, length, True)
        if hit:
            return hit[0]
    return None


def line_square_masks(g: Graph) -> list[int]:
    """Adjacency of ``L(G)^2``: edges meeting, or joined by a third edge."""
    inc = [0] * g.n
    for i, (a, b) in enumerate(g.edges):
        inc[a] |= 1 << i
        inc[b] |= 1 << i
    near = [inc[v] for v in range(g.n)]
    for v in range(g.n):
        for w in iter_bits(g.masks[v]):
            near[v] |= inc[w]
    return [(near[a] | near[b]) & ~(1 << i) for i, (a, b) in enumerate(g.edges)]


# flowers


@dataclass(frozen=True)
class FlowerWitness:
    u_vertices: tuple[int, ...]
    w_vertices: tuple[int, ...]
    base_cycle: tuple[int, ...]
    pending: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.u_vertices)

    def as_dict(self) -> dict:
        return {
            "u": list(self.u_vertices),
            "w": list(self.w_vertices),
            "base_cycle": list(self.base_cycle),
            "pending": list(self.pending),
        }


@dataclass(frozen=True)
class ConditionReport:
    valid: bool
    violations: tuple[str, ...]
    # for flowers: a hamiltonian cycle of G[U + W] without w-w edges
    certificate: tuple[int, ...] | None = None

    def as_dict(self) -> dict:
        return {"valid": self.valid, "violations": list(self.violations), "certificate": self.certificate}


def _consecutive(i: int, j: int, n: int) -> bool:
    return (i - j) % n in (1, n - 1)


def _cw_index(seq: Sequence[int], items: Sequence[int]) -> bool:
    """``items`` appear along the cyclic sequence ``seq`` in the given cyclic order."""
    pos = {v: i for i, v in enumerate(seq)}
    if any(x not in pos for x in items):
        return False
    idx = [pos[x] for x in items]
    if len(idx) <= 2:
        return True
    descents = sum(1 for a, b in zip(idx, idx[1:] + idx[:1]) if b < a)
    return descents == 1


def validate_flower(g: Graph, f: FlowerWitness) -> ConditionReport:
    """Check the five flower conditions one by one.

    Violations are labelled with the number of the failing condition,
    ``"size"`` for malformed witnesses.
    """
    bad: list[str] = []
    U, W, C = list(f.u_vertices), list(f.w_vertices), list(f.base_cycle)
    n, q = len(U), len(W)
    every = U + W + C
    if any(not 0 <= v < g.n for v in every):
        return ConditionReport(False, ("size: vertex out of range",))
    if len(set(U)) != n or len(set(W)) != q or set(U) & set(W):
        return ConditionReport(False, ("size: U and W must be disjoint lists of distinct vertices",))
    if n < 3 or not (n + 1) // 2 <= q <= n:
        bad.append(f"size: need ceil(n/2) <= q <= n, got n={n}, q={q}")
        return ConditionReport(False, tuple(bad))
    members = set(U) | set(W)
    on_c = set(C)

    # i) a cycle through W in order
    if len(C) < 3 or len(on_c) != len(C) or not on_c <= members:
        bad.append("i: base cycle must be a simple cycle on flower vertices")
    elif any(not g.has_edge(C[k], C[(k + 1) % len(C)]) for k in range(len(C))):
        bad.append("i: base cycle uses a non-edge")
    elif not set(W) <= on_c or not _cw_index(C, W):
        bad.append("i: W does not lie on the cycle in the order w_1..w_q")

    # ii) U ordered along C, the two anchoring edges, no chords between U
    if not bad and not _orders_agree(C, U, W):
        bad.append("ii: U is not sorted by its order along the cycle")
    if not g.has_edge(U[0], W[-1]):
        bad.append("ii: u_1 w_q is not an edge")
    if not g.has_edge(U[1], W[0]):
        bad.append("ii: u_2 w_1 is not an edge")
    for i, j in combinations(range(n), 2):
        if not _consecutive(i, j, n) and g.has_edge(U[i], U[j]):
            bad.append(f"ii: non-consecutive u_{i + 1} u_{j + 1} is an edge")

    if bad and bad[0].startswith("i:"):
        return ConditionReport(False, tuple(bad))

    fmask = mask_of(members)
    pos = {v: i for i, v in enumerate(C)}
    used_pending: dict[int, int] = {}
    for i in range(q):
        a, b = W[i], W[(i + 1) % q]
        pa, pb = pos[a], pos[b]
        step = (pb - pa) % len(C)
        if step == 1:
            # iii) a w-w edge of C needs exactly one pending u below it
            owners = [u for u in U if u not in on_c and g.masks[u] & fmask == (1 << a) | (1 << b)]
            if len(owners) != 1:
                bad.append(f"iii: w_{i + 1} w_{(i + 1) % q + 1} on the cycle has {len(owners)} pending vertices")
            else:
                used_pending[owners[0]] = i
        else:
            # iv) otherwise one u, or an adjacent pair u t, sits between them
            seg = [C[(pa + d) % len(C)] for d in range(1, step)]
            if not (1 <= len(seg) <= 2 and all(x in U for x in seg)):
                bad.append(f"iv: between w_{i + 1} and w_{(i + 1) % q + 1} the cycle has {seg}")

    # v) pending vertices: off the cycle, pairwise nonadjacent, exactly the declared ones
    off = [u for u in U if u not in on_c]
    if set(off) != set(f.pending):
        bad.append("v: declared pending vertices differ from U minus the cycle")
    if set(off) - set(used_pending):
        bad.append("v: a vertex of U is neither on the cycle nor pending")
    for a, b in combinations(off, 2):
        if g.has_edge(a, b):
            bad.append(f"v: pending vertices {a} and {b} are adjacent")

    if bad:
        return ConditionReport(False, tuple(bad))
    return ConditionReport(True, (), hamiltonian_cycle(f, used_pending, W))


def _orders_agree(C: Sequence[int], U: Sequence[int], W: Sequence[int]) -> bool:
    """U and W interleave along C in the labelled order: walking C from w_q,
    the u's met are u_1, u_2, ... in order."""
    pos = {v: i for i, v in enumerate(C)}
    start = pos[W[-1]]
    ranks = [(pos[u] - start) % len(C) for u in U if u in pos]
    return ranks == sorted(ranks)


def hamiltonian_cycle(f: FlowerWitness, pending_at: dict[int, int], W: Sequence[int]) -> tuple[int, ...]:
    """Reinsert every pending vertex between its two w's; the result runs
    through all of ``U + W`` and uses no w-w edge."""
    q = len(W)
    below = {(W[i], W[(i + 1) % q]): u for u, i in pending_at.items()}
    out: list[int] = []
    C = f.base_cycle
    for k, v in enumerate(C):
        out.append(v)
        nxt = C[(k + 1) % len(C)]
        if (v, nxt) in below:
            out.append(below[(v, nxt)])
    return tuple(out)


def withering_vertex(g: Graph, f: FlowerWitness, strict: bool = False) -> int | None:
    """Smallest vertex outside the flower adjacent to two non-consecutive
    u's.  With ``strict`` every vertex counts, the flower's own included, so
    a strict hit is exactly a chord of U in ``G^2``."""
    blocked = 0 if strict else mask_of(f.u_vertices) | mask_of(f.w_vertices)
    return _linker(g, f.u_vertices, blocked)


def _linker(g: Graph, U: Sequence[int], blocked: int) -> int | None:
    n = len(U)
    for v in range(g.n):
        if blocked >> v & 1:
            continue
        hits = [i for i, u in enumerate(U) if g.masks[v] >> u & 1]
        if any(not _consecutive(i, j, n) for i, j in combinations(hits, 2)):
            return v
    return None


def is_withered(g: Graph, f: FlowerWitness, strict: bool = False) -> bool:
    report = validate_flower(g, f)
    if not report.valid:
        raise GraphError(f"not a valid flower: {'; '.join(report.violations)}")
    return withering_vertex(g, f, strict) is not None


def flower_from_square_cycle(g: Graph, cycle: Sequence[int]) -> FlowerWitness:
    """Read a flower off an induced cycle of ``G^2`` (length at least 4).

    Consecutive cycle vertices that are not adjacent in ``G`` get their
    smallest common neighbor as a w; a u whose two w's are adjacent becomes
    pending and the cycle takes the w-w edge instead.
    """
    m = g.masks
    c = list(cycle)
    n = len(c)
    if n < 4:
        raise GraphError("flowers are read off cycles of length at least 4")
    gap = [not (m[c[i]] >> c[(i + 1) % n] & 1) for i in range(n)]
    # rotate so that the pair (u_n, u_1) is bridged by a w
    r = next(i for i in range(n) if gap[(i - 1) % n])
    U = c[r:] + c[:r]
    gap = gap[r:] + gap[:r]  # gap[i]: pair (U[i], U[i+1])
    bridge: dict[int, int] = {}
    for i in range(n):
        if gap[i]:
            common = m[U[i]] & m[U[(i + 1) % n]]
            bridge[i] = (common & -common).bit_length() - 1
    W = [bridge[i] for i in range(n) if gap[i]]
    pending = []
    for i in range(n):
        left, right = (i - 1) % n, i
        if gap[left] and gap[right] and m[bridge[left]] >> bridge[right] & 1:
            pending.append(U[i])
    seq: list[int] = []
    for i in range(n):
        if U[i] not in pending:
            seq.append(U[i])
        if gap[i]:
            seq.append(bridge[i])
    # start the cycle at w_q so that it reads w_q, u_1, ...
    wq = W[-1]
    k = seq.index(wq)
    seq = seq[k:] + seq[:k]
    return FlowerWitness(tuple(U), tuple(W), tuple(seq), tuple(p for p in U if p in pending))


def find_flower(g: Graph, n: int) -> FlowerWitness | None:
    """A non-withered flower of size ``n``, present exactly when ``G^2`` has
    an induced ``C_n``; its U is that cycle."""
    if n < 4:
        raise GraphError("flower size must be at least 4")
    cycle = smallest_induced_cycle(power_masks(g.masks, 2), n)
    if cycle is None:
        return None
    f = flower_from_square_cycle(g, cycle)
    report = validate_flower(g, f)
    if not report.valid:
        raise AssertionError(f"extracted flower fails validation: {report.violations}")
    if withering_vertex(g, f, strict=True) is not None:
        raise AssertionError("flower read off an induced cycle of the square is withered")
    return f


def enumerate_flowers(g: Graph, n: int, budget: OracleBudget | None = None) -> Iterator[FlowerWitness]:
    """Every valid flower of size ``n`` (several labellings of the same one
    may appear).  Exhaustive over U sequences, so kept to small graphs."""
    limit = (budget or OracleBudget.from_env()).cycles
    if g.n > limit:
        raise BudgetExceeded(f"flower enumeration budget is n <= {limit}, got n = {g.n}")
    m = g.masks
    seq: list[int] = []

    def sequences() -> Iterator[list[int]]:
        def rec(used: int) -> Iterator[list[int]]:
            k = len(seq)
            if k == n:
                if all(not m[seq[-1]] >> seq[j] & 1 for j in range(1, n - 2)):
                    yield list(seq)
                return
            for v in range(g.n):
                if used >> v & 1:
                    continue
                if any(m[v] >> seq[j] & 1 for j in range(0, k - 1) if not (k == n - 1 and j == 0)):
                    continue
                seq.append(v)
                yield from rec(used | (1 << v))
                seq.pop()

        yield from rec(0)

    for U in sequences():
        umask = mask_of(U)
        options: list[list[int | None]] = []
        for i in range(n):
            a, b = U[i], U[(i + 1) % n]
            opts: list[int | None] = [w for w in iter_bits(m[a] & m[b] & ~umask)]
            if m[a] >> b & 1 and i != n - 1:
                opts.append(None)
            options.append(opts)
        yield from _flowers_over(g, U, options)


def _flowers_over(g: Graph, U: list[int], options: list[list[int | None]]) -> Iterator[FlowerWitness]:
    n = len(U)
    m = g.masks
    choice: list[int | None] = [None] * n

    def rec(i: int, used: int) -> Iterator[FlowerWitness]:
        if i == n:
            yield from _with_pending(g, U, list(choice))
            return
        for w in options[i]:
            if w is None:
                if i > 0 and choice[i - 1] is None:
                    continue
                choice[i] = None
                yield from rec(i + 1, used)
            elif not used >> w & 1:
                choice[i] = w
                yield from rec(i + 1, used | (1 << w))

    yield from rec(0, 0)


def _with_pending(g: Graph, U: list[int], bridge: list[int | None]) -> Iterator[FlowerWitness]:
    n = len(U)
    m = g.masks
    W = [w for w in bridge if w is not None]
    can = [
        i for i in range(n)
        if bridge[(i - 1) % n] is not None and bridge[i] is not None and m[bridge[(i - 1) % n]] >> bridge[i] & 1
    ]
    for bits in range(1 << len(can)):
        pend = {U[can[j]] for j in range(len(can)) if bits >> j & 1}
        seq = []
        for i in range(n):
            if U[i] not in pend:
                seq.append(U[i])
            if bridge[i] is not None:
                seq.append(bridge[i])
        k = seq.index(W[-1])
        seq = seq[k:] + seq[:k]
        f = FlowerWitness(tuple(U), tuple(W), tuple(seq), tuple(u for u in U if u in pend))
        if validate_flower(g, f).valid:
            yield f


# sunflowers


@dataclass(frozen=True)
class SunflowerWitness:
    u_vertices: tuple[int, ...]
    w_vertices: tuple[int, ...]  # u_i is adjacent to w_i and w_{i+1}
    suspended_by: int | None = None

    @property
    def suspended(self) -> bool:
        return self.suspended_by is not None

    def as_dict(self) -> dict:
        return {"u": list(self.u_vertices), "w": list(self.w_vertices), "suspended_by": self.suspended_by}


def validate_sunflower(g: Graph, s: SunflowerWitness) -> ConditionReport:
    U, W = s.u_vertices, s.w_vertices
    n = len(U)
    bad = []
    if len(W) != n or n < 3 or len(set(U) | set(W)) != 2 * n:
        return ConditionReport(False, ("size: need n distinct u's and n distinct w's",))
    if not g.is_stable(U):
        bad.append("U is not stable")
    for i in range(n):
        for j in range(n):
            want = j == i or j == (i + 1) % n
            if g.has_edge(U[i], W[j]) != want:
                bad.append(f"u_{i + 1} w_{j + 1} adjacency should be {want}")
    if not is_chordal(induced_subgraph(g, W).graph):
        bad.append("W does not induce a chordal graph")
    for i in range(n):
        if not g.has_edge(W[i], W[(i + 1) % n]):
            bad.append(f"w_{i + 1} w_{(i + 1) % n + 1} is not an edge")
    return ConditionReport(not bad, tuple(bad))


def find_sunflower(
    g: Graph, n: int, budget: OracleBudget | None = None, allow_nonchordal: bool = False
) -> SunflowerWitness | None:
    """A sunflower of size ``n``, unsuspended whenever one exists.

    In a chordal graph an unsuspended one exists exactly when ``G^2`` has an
    induced ``C_n``, and it is read off that cycle.  Otherwise a backtracking
    search looks for a suspended one.  Non-chordal graphs are refused unless
    ``allow_nonchordal`` is set; then the search alone decides.
    """
    if n < 4:
        raise GraphError("sunflower size must be at least 4")
    chordal = is_chordal(g)
    if not chordal and not allow_nonchordal:
        raise NotChordalError("sunflowers are searched in chordal graphs")
    if chordal:
        f = find_flower(g, n)
        if f is not None:
            if len(f.w_vertices) != n or len(f.pending) != n:
                raise AssertionError("a flower in a chordal graph should have every u pending")
            W = (f.w_vertices[-1],) + f.w_vertices[:-1]
            s = SunflowerWitness(f.u_vertices, W, None)
            report = validate_sunflower(g, s)
            if not report.valid:
                raise AssertionError(f"sunflower from square cycle invalid: {report.violations}")
            return s
    limit = (budget or OracleBudget.from_env()).cycles
    if g.n > limit:
        raise BudgetExceeded(f"sunflower search budget is n <= {limit}, got n = {g.n}")
    first = None
    for U, W in _search_sunflowers(g, n):
        apex = _linker(g, U, mask_of(U) | mask_of(W))
        if apex is None:
            return SunflowerWitness(U, W, None)
        if first is None:
            first = SunflowerWitness(U, W, apex)
        if chordal:
            break  # no unsuspended one exists, the square made sure of that
    return first


def _search_sunflowers(g: Graph, n: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Backtracking over u_1 < other u's; ``ws`` holds w_2.., w_1 comes last."""
    m = g.masks
    us: list[int] = []
    ws: list[int] = []

    def rec(used: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
        k = len(us)
        umask = mask_of(us)
        if k == n:
            inner = mask_of(us[1:-1])
            for w in iter_bits(m[us[0]] & m[us[-1]] & ~used):
                if m[w] & inner or not (m[w] >> ws[0] & 1 and m[w] >> ws[-1] & 1):
                    continue
                yield tuple(us), (w,) + tuple(ws)
            return
        older = mask_of(us[:-1])
        for w in iter_bits(m[us[-1]] & ~used):
            if m[w] & older or (ws and not m[w] >> ws[-1] & 1):
                continue
            wmask = mask_of(ws)
            ws.append(w)
            for u in iter_bits(m[w] & ~used & ~(1 << w)):
                if u < us[0] or m[u] & umask or m[u] & wmask:
                    continue
                us.append(u)
                yield from rec(used | (1 << w) | (1 << u))
                us.pop()
            ws.pop()

    for u1 in range(g.n):
        us[:] = [u1]
        ws[:] = []
        yield from rec(1 << u1)


# sprouts


@dataclass(frozen=True)
class SproutWitness:
    u_edges: tuple[EdgeId, ...]
    w_edges: tuple[EdgeId, ...]
    base_cycle: tuple[EdgeId, ...]
    pending: tuple[EdgeId, ...]

    @property
    def size(self) -> int:
        return len(self.u_edges)

    def as_dict(self) -> dict:
        def ids(es):
            return [{"index": e.index, "endpoints": list(e.endpoints)} for e in es]

        return {"u": ids(self.u_edges), "w": ids(self.w_edges), "base_cycle": ids(self.base_cycle), "pending": ids(self.pending)}


def _edge_cycle_vertices(edges: Sequence[EdgeId]) -> list[int] | None:
    """Vertex sequence of the cycle traced by these edges, or ``None``."""
    k = len(edges)
    if k < 3:
        return None
    joints = []
    for i in range(k):
        common = set(edges[i].endpoints) & set(edges[(i + 1) % k].endpoints)
        if len(common) != 1:
            return None
        joints.append(common.pop())
    if len(set(joints)) != k:
        return None
    for i in range(k):
        if set(edges[i].endpoints) != {joints[i - 1], joints[i]}:
            return None
    return joints


def validate_sprout(g: Graph, s: SproutWitness) -> ConditionReport:
    """Check the five sprout conditions; fertility is checked separately."""
    bad: list[str] = []
    U, W, C = list(s.u_edges), list(s.w_edges), list(s.base_cycle)
    n, q = len(U), len(W)
    for e in U + W + C:
        if not 0 <= e.index < g.m or g.edge_id(e.index) != e:
            return ConditionReport(False, ("size: not an edge of the graph",))
    if len(set(U)) != n or len(set(W)) != q or set(U) & set(W):
        return ConditionReport(False, ("size: U and W must be disjoint lists of distinct edges",))
    if n < 3 or not (n + 1) // 2 <= q <= n:
        return ConditionReport(False, (f"size: need ceil(n/2) <= q <= n, got n={n}, q={q}",))

    def meet(a: EdgeId, b: EdgeId) -> set[int]:
        return set(a.endpoints) & set(b.endpoints)

    # i) a cycle of G whose edges include W in order
    if _edge_cycle_vertices(C) is None or len(set(C)) != len(C):
        return ConditionReport(False, ("i: base cycle is not a cycle of the graph",))
    if not set(W) <= set(C) or not _cw_index([e.index for e in C], [e.index for e in W]):
        bad.append("i: W does not lie on the cycle in the order w_1..w_q")

    # ii) order along C, anchoring meets, disjoint non-consecutive u's
    Ci = [e.index for e in C]
    if not _orders_agree(Ci, [e.index for e in U], [e.index for e in W]):
        bad.append("ii: U is not sorted by its order along the cycle")
    if not meet(U[0], W[-1]):
        bad.append("ii: u_1 does not meet w_q")
    if not meet(U[1], W[0]):
        bad.append("ii: u_2 does not meet w_1")
    for i, j in combinations(range(n), 2):
        if not _consecutive(i, j, n) and meet(U[i], U[j]):
            bad.append(f"ii: non-consecutive u_{i + 1}, u_{j + 1} meet")

    pos = {e: i for i, e in enumerate(C)}
    pending_found: set[EdgeId] = set()
    for i in range(q):
        a, b = W[i], W[(i + 1) % q]
        common = meet(a, b)
        if common:
            # iii) exactly one u through the shared vertex
            owners = [u for u in U if common & set(u.endpoints)]
            if len(owners) != 1:
                bad.append(f"iii: {len(owners)} u-edges through the joint of w_{i + 1}, w_{(i + 1) % q + 1}")
            else:
                pending_found.add(owners[0])
        else:
            # iv) one u, or an adjacent pair t u, between them on C
            step = (pos[b] - pos[a]) % len(C)
            seg = [C[(pos[a] + d) % len(C)] for d in range(1, step)]
            if not (1 <= len(seg) <= 2 and all(e in U for e in seg)):
                bad.append(f"iv: between w_{i + 1} and w_{(i + 1) % q + 1} the cycle has {[e.index for e in seg]}")

    # v) pending edges pairwise disjoint, everything else on C
    if set(s.pending) != pending_found:
        bad.append("v: declared pending edges differ from those found by iii")
    for a, b in combinations(sorted(pending_found), 2):
        if meet(a, b):
            bad.append(f"v: pending edges {a.index} and {b.index} meet")
    for u in U:
        if u not in pending_found and u not in pos:
            bad.append(f"v: u-edge {u.index} is neither pending nor on the cycle")
    return ConditionReport(not bad, tuple(bad))


def infertility_edge(g: Graph, s: SproutWitness, strict: bool = False) -> EdgeId | None:
    """An edge outside the sprout meeting two non-consecutive u-edges.  With
    ``strict`` every edge counts, the sprout's own included."""
    U = s.u_edges
    n = len(U)
    skip = set() if strict else set(U) | set(s.w_edges) | set(s.base_cycle)
    for e in g.edge_ids():
        if e in skip:
            continue
        ends = set(e.endpoints)
        hits = [i for i, u in enumerate(U) if u != e and ends & set(u.endpoints)]
        if any(not _consecutive(i, j, n) for i, j in combinations(hits, 2)):
            return e
    return None


def is_fertile(g: Graph, s: SproutWitness, strict: bool = False) -> bool:
    return infertility_edge(g, s, strict) is None


def find_fertile_sprout(g: Graph, n: int) -> SproutWitness | None:
    """A fertile sprout of size ``n``, present exactly when ``L(G)^2`` has an
    induced ``C_n``: a flower of the line graph, written as edges of ``G``."""
    if n < 4:
        raise GraphError("sprout size must be at least 4")
    lg = line_graph(g)
    f = find_flower(lg.line_graph, n)
    if f is None:
        return None
    back = lg.back_map
    s = SproutWitness(
        tuple(back[x] for x in f.u_vertices),
        tuple(back[x] for x in f.w_vertices),
        tuple(back[x] for x in f.base_cycle),
        tuple(back[x] for x in f.pending),
    )
    report = validate_sprout(g, s)
    if not report.valid:
        raise AssertionError(f"sprout read off a line-graph flower is invalid: {report.violations}")
    if not is_fertile(g, s, strict=True):
        raise AssertionError("sprout read off a line-graph flower is infertile")
    return s


# sunflower sprouts


@dataclass(frozen=True)
class SunflowerSproutWitness:
    cycle: tuple[int, ...]  # v_1..v_n, an induced cycle
    u_vertices: tuple[int, ...]  # u_i adjacent to v_i

    def as_dict(self) -> dict:
        return {"v": list(self.cycle), "u": list(self.u_vertices)}


def validate_sunflower_sprout(g: Graph, s: SunflowerSproutWitness, fertile: bool = True) -> ConditionReport:
    V, U = s.cycle, s.u_vertices
    n = len(V)
    bad = []
    if len(U) != n or len(set(V)) != n or n < 3:
        return ConditionReport(False, ("size: need n cycle vertices and n u's",))
    sub = induced_subgraph(g, V).graph
    if sub.m != n or any(not g.has_edge(V[i], V[(i + 1) % n]) for i in range(n)):
        bad.append("V does not induce the cycle v_1..v_n")
    if set(U) & set(V):
        bad.append("U meets V")
    for i in range(n):
        if not g.has_edge(V[i], U[i]):
            bad.append(f"v_{i + 1} u_{i + 1} is not an edge")
    far = [(i, j) for i in range(n) for j in range(n) if (j - i) % n not in (0, 1, n - 1)]
    for i, j in far:
        if i < j and U[i] == U[j]:
            bad.append(f"non-consecutive u_{i + 1} and u_{j + 1} coincide")
    if fertile:
        for i, j in far:
            if i < j and U[i] != U[j] and g.has_edge(U[i], U[j]):
                bad.append(f"infertile: u_{i + 1} u_{j + 1} is an edge")
            if g.has_edge(U[i], V[j]):
                bad.append(f"infertile: u_{i + 1} v_{j + 1} is an edge")
    return ConditionReport(not bad, tuple(bad))


def _sunflower_sprout_4(masks: Sequence[int], c: Sequence[int]) -> tuple[int, ...] | None:
    cm = mask_of(c)
    A = [masks[c[i]] & ~cm & ~masks[c[(i + 2) % 4]] for i in range(4)]
    picks = []
    for i in (0, 1):
        pair = None
        for a in iter_bits(A[i]):
            rest = A[i + 2] & ~(1 << a) & ~masks[a]
            if rest:
                pair = (a, (rest & -rest).bit_length() - 1)
                break
        if pair is None:
            return None
        picks.append(pair)
    (u1, u3), (u2, u4) = picks
    return (u1, u2, u3, u4)


def find_fertile_sunflower_sprout(g: Graph, n: int) -> SunflowerSproutWitness | None:
    """Fertile sunflower sprout of size 4 or 5 on some induced cycle."""
    m = g.masks
    for c in sorted(induced_cycles(m, n), key=lambda c: (sorted(c), c)):
        if n == 4:
            hit = _sunflower_sprout_4(m, c)
        else:
            hit = _sunflower_sprout_any(m, c)
        if hit is not None:
            return SunflowerSproutWitness(tuple(c), hit)
    return None


def _sunflower_sprout_any(masks: Sequence[int], c: Sequence[int]) -> tuple[int, ...] | None:
    n = len(c)
    cm = mask_of(c)
    far_v = [mask_of(c[j] for j in range(n) if (j - i) % n not in (0, 1, n - 1)) for i in range(n)]
    cand = [masks[c[i]] & ~cm & ~far_v[i] for i in range(n)]
    U = [0] * n

    def rec(i: int) -> bool:
        if i == n:
            return True
        for u in iter_bits(cand[i]):
            clash = False
            for j in range(i):
                if (i - j) % n in (1, n - 1):
                    continue
                if U[j] == u or masks[u] >> U[j] & 1:
                    clash = True
                    break
            if clash:
                continue
            U[i] = u
            if rec(i + 1):
                return True
        return False

    return tuple(U) if rec(0) else None


# forbidden-structure catalog for chordal line-graph squares


@dataclass(frozen=True)
class CatalogWitness:
    kind: str
    cycle: tuple[int, ...]
    extra: tuple[int, ...] = ()
    detail: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"kind": self.kind, "cycle": list(self.cycle), "extra": list(self.extra), **self.detail}


CYCLE = "induced-cycle"
SUNFLOWER_SPROUT_4 = "fertile-sunflower-sprout-4"
SUNFLOWER_SPROUT_5 = "fertile-sunflower-sprout-5"
III_A = "III_a"
TYPE_I = "type-I"
TYPE_A = "type-A"


def _five_cycle_match(masks: Sequence[int], c: Sequence[int]) -> CatalogWitness | None:
    """III_a or type I on an induced five-cycle.

    For consecutive ``x = c_i``, ``y = c_{i+1}``: A holds vertices off C
    adjacent to x whose C-neighbors lie in ``N_C[x]``, B likewise for y.
    A vertex in both is the III_a apex; otherwise any a in A and b in B give
    type I (the edge ab is optional).
    """
    cm = mask_of(c)
    nbr = [mask_of((c[(i - 1) % 5], c[i], c[(i + 1) % 5])) for i in range(5)]
    for i in range(5):
        x, y = c[i], c[(i + 1) % 5]
        A = [a for a in iter_bits(masks[x] & ~cm) if masks[a] & cm & ~nbr[i] == 0]
        B = [b for b in iter_bits(masks[y] & ~cm) if masks[b] & cm & ~nbr[(i + 1) % 5] == 0]
        both = sorted(set(A) & set(B))
        if both:
            return CatalogWitness(III_A, tuple(c), (both[0],), {"edge": [x, y]})
        if A and B:
            return CatalogWitness(TYPE_I, tuple(c), (A[0], B[0]), {"edge": [x, y]})
    return None


def line_square_catalog_witness(g: Graph) -> CatalogWitness | None:
    """First forbidden structure found, or ``None`` when there is none.

    Checked in the order: induced cycle of length at least 6, fertile
    sunflower sprout of size 4, III_a / type I on an induced five-cycle.
    """
    m = g.masks
    if is_chordal_masks(m):
        return None
    for length in range(6, g.n + 1):
        c = _cycles(m, length, True)
        if c:
            return CatalogWitness(CYCLE, c[0])
    for c in _cycles(m, 4, False):
        hit = _sunflower_sprout_4(m, c)
        if hit is not None:
            return CatalogWitness(SUNFLOWER_SPROUT_4, c, hit)
    for c in _cycles(m, 5, False):
        hit = _five_cycle_match(m, c)
        if hit is not None:
            return hit
    return None


def line_square_chordal_direct(g: Graph) -> bool:
    return is_chordal_masks(line_square_masks(g))


class CatalogDisagreement(AssertionError):
    def __init__(self, g: Graph, direct: bool, witness: CatalogWitness | None) -> None:
        self.graph6 = to_graph6(g)
        super().__init__(f"direct={direct} but catalog witness={witness} for graph6 {self.graph6}")


@dataclass(frozen=True)
class LineSquareVerdict:
    chordal: bool
    witness: CatalogWitness | None

    def as_dict(self) -> dict:
        return {"chordal": self.chordal, "witness": self.witness.as_dict() if self.witness else None}


def line_square_chordal_verdict(g: Graph) -> LineSquareVerdict:
    """Chordality of ``L(G)^2`` decided twice, by building it and by the
    forbidden-structure search; the two must agree."""
    direct = line_square_chordal_direct(g)
    witness = line_square_catalog_witness(g)
    if direct != (witness is None):
        raise CatalogDisagreement(g, direct, witness)
    return LineSquareVerdict(direct, witness)


def _type_a(masks: Sequence[int], c: Sequence[int]) -> tuple[int, int, int, int] | None:
    """Three distinct pendants at consecutive cycle vertices ``c_j-1, c_j, c_j+1``
    of an induced six-cycle, each seeing only its own cycle vertex's closed
    cycle neighborhood, the two outer ones nonadjacent."""
    cm = mask_of(c)
    allowed = [mask_of((c[(i - 1) % 6], c[i], c[(i + 1) % 6])) for i in range(6)]
    P = [[p for p in iter_bits(masks[c[i]] & ~cm) if masks[p] & cm & ~allowed[i] == 0] for i in range(6)]
    for j in range(6):
        left, mid, right = (j - 1) % 6, j, (j + 1) % 6
        for p1 in P[mid]:
            for p0 in P[left]:
                if p0 == p1:
                    continue
                for p2 in P[right]:
                    if p2 in (p0, p1) or masks[p0] >> p2 & 1:
                        continue
                    return (j, p0, p1, p2)
    return None


@dataclass(frozen=True)
class PerfectionCheck:
    holds: bool
    witness: CatalogWitness | None
    antihole: tuple[int, ...] | None = None

    def as_dict(self) -> dict:
        return {
            "necessary_condition_holds": self.holds,
            "witness": self.witness.as_dict() if self.witness else None,
            "antihole_edges": list(self.antihole) if self.antihole else None,
        }


def line_square_perfection_necessary(g: Graph, budget: OracleBudget | None = None) -> PerfectionCheck:
    """Necessary condition for a perfect ``L(G)^2``: no induced cycle of
    length at least 7, no fertile sunflower sprout of size 5, no type A.

    A ``True`` result does not certify perfection.  When an induced ``C_7``
    is present, the oracle confirms the antihole its edges span in ``L(G)^2``.
    """
    m = g.masks
    antihole = None
    seven = _cycles(m, 7, True)
    if seven:
        c = seven[0]
        ids = [g.edge_index(c[i], c[(i + 1) % 7]) for i in range(7)]
        sq = oracle.line_graph_square(g)
        sub = induced_subgraph(sq, ids).graph
        report = oracle.has_antihole(sub, min_len=7, budget=budget)
        if not report.found:
            raise AssertionError("the edges of an induced C_7 should span an antihole in L(G)^2")
        antihole = tuple(ids)
    for length in range(7, g.n + 1):
        c = _cycles(m, length, True)
        if c:
            return PerfectionCheck(False, CatalogWitness(CYCLE, c[0]), antihole)
    s5 = find_fertile_sunflower_sprout(g, 5)
    if s5 is not None:
        return PerfectionCheck(False, CatalogWitness(SUNFLOWER_SPROUT_5, s5.cycle, s5.u_vertices), antihole)
    for c in _cycles(m, 6, False):
        hit = _type_a(m, c)
        if hit is not None:
            j, p0, p1, p2 = hit
            return PerfectionCheck(False, CatalogWitness(TYPE_A, c, (p0, p1, p2), {"center": c[j]}), antihole)
    return PerfectionCheck(True, None, antihole)


# separators of the square


def _components_masks(masks: Sequence[int], alive: int) -> list[int]:
    comps = []
    rest = alive
    while rest:
        low = rest & -rest
        comp = low
        frontier = low
        while frontier:
            reach = 0
            for v in iter_bits(frontier):
                reach |= masks[v]
            frontier = reach & alive & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


def minimal_separators(masks: Sequence[int]) -> list[int]:
    """Minimal a,b-separators for some a, b: the sets whose removal leaves
    at least two components seeing all of the set."""
    n = len(masks)
    full_set = (1 << n) - 1
    out = []
    for s in range(1, full_set):
        comps = _components_masks(masks, full_set & ~s)
        full = 0
        for comp in comps:
            seen = 0
            for v in iter_bits(comp):
                seen |= masks[v]
            if seen & s == s:
                full += 1
        if full >= 2:
            out.append(s)
    return out


def _two_strong_components(masks: Sequence[int], s: int, n: int) -> list[int] | None:
    """Classes of ``V - S`` that stay linked once every path through two
    consecutive vertices of ``S`` is cut, or None when only one class is left.

    Works in ``G`` itself: components of ``G - S`` are merged whenever a
    single vertex of ``S`` touches both.
    """
    full_set = (1 << n) - 1
    comps = _components_masks(masks, full_set & ~s)
    for v in iter_bits(s):
        touching = [c for c in comps if masks[v] & c]
        if len(touching) > 1:
            merged = 0
            for c in touching:
                merged |= c
            comps = [c for c in comps if not masks[v] & c] + [merged]
    return comps if len(comps) >= 2 else None


def minimal_two_strong_separators(g: Graph) -> list[int]:
    """Minimal 2-strong a,b-separators of ``G`` for some a, b, from the
    definition: a 2-strong separator with a and b apart such that no proper
    subset is a 2-strong separator keeping them apart."""
    n = g.n
    m = g.masks
    table: dict[int, list[int] | None] = {}

    def comps(s: int) -> list[int] | None:
        if s not in table:
            table[s] = _two_strong_components(m, s, n)
        return table[s]

    def apart(s: int, a: int, b: int) -> bool:
        cs = comps(s)
        return cs is not None and not any(c >> a & 1 and c >> b & 1 for c in cs)

    out = []
    for s in range(1, (1 << n) - 1):
        cs = comps(s)
        if cs is None:
            continue
        reps = [(c & -c).bit_length() - 1 for c in cs]
        for a, b in combinations(reps, 2):
            sub = (s - 1) & s
            minimal = True
            while True:
                if apart(sub, a, b):
                    minimal = False
                    break
                if sub == 0:
                    break
                sub = (sub - 1) & s
            if minimal:
                out.append(s)
                break
    return out


@dataclass(frozen=True)
class SeparatorCheck:
    square_chordal: bool
    separators: tuple[tuple[int, ...], ...]
    non_clique: tuple[int, ...] | None
    definitions_agree: bool

    @property
    def equivalence_holds(self) -> bool:
        return self.definitions_agree and self.square_chordal == (self.non_clique is None)


def two_strong_separator_check(g: Graph, max_n: int = 12) -> SeparatorCheck:
    """Minimal 2-strong separators of ``G`` by definition, compared with the
    minimal separators of ``G^2`` and tested for being 2-strong cliques."""
    if g.n > max_n:
        raise BudgetExceeded(f"separator enumeration budget is n <= {max_n}, got n = {g.n}")
    if not is_connected(g):
        raise GraphError("2-strong separators are defined for connected graphs")
    sq = power_masks(g.masks, 2)
    by_square = minimal_separators(sq)
    by_definition = minimal_two_strong_separators(g)
    non_clique = None
    for s in by_definition:
        if any(not sq[a] >> b & 1 for a, b in combinations(iter_bits(s), 2)):
            non_clique = bits_to_tuple(s)
            break
    return SeparatorCheck(
        is_chordal_masks(sq),
        tuple(bits_to_tuple(s) for s in by_definition),
        non_clique,
        sorted(by_square) == sorted(by_definition),
    )


@dataclass(frozen=True)
class IntersectingFamilyCheck:
    maximal_two_strong_clique: bool
    maximal_intersecting_family: bool

    @property
    def agree(self) -> bool:
        return self.maximal_two_strong_clique == self.maximal_intersecting_family


def intersecting_family_check(g: Graph, x: Sequence[int]) -> IntersectingFamilyCheck:
    """Both sides of: X is a maximal 2-strong clique iff the maximal cliques
    of ``G[X]`` form a maximal intersecting family of cliques of ``G``."""
    from .chordal import maximal_cliques_chordal, mcs

    if not is_chordal(g):
        raise NotChordalError("the intersecting-family test is for chordal graphs")
    xs = sorted(set(x))
    xm = mask_of(xs)
    sq = power_masks(g.masks, 2)
    clique2 = bool(xs) and all(sq[a] >> b & 1 for a, b in combinations(xs, 2))
    extendable = any(sq[v] & xm == xm for v in range(g.n) if not xm >> v & 1)
    lhs = clique2 and not extendable

    if not xs:
        return IntersectingFamilyCheck(lhs, False)
    sub = induced_subgraph(g, xs)
    inner = [mask_of(sub.vertex_map[v] for v in c) for c in maximal_cliques_chordal(sub.graph, mcs(sub.graph))]
    pairwise = all(a & b for a, b in combinations(inner, 2))
    g_cliques = [mask_of(c) for c in maximal_cliques_chordal(g, mcs(g))]
    blocked = any(c & ~xm and all(c & d for d in inner) for c in g_cliques)
    return IntersectingFamilyCheck(lhs, pairwise and not blocked)
