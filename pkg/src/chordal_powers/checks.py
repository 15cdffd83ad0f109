"""Oracle agreement sweeps behind ``oracle-check`` and the acceptance tests.

Each suite runs a production routine and the matching brute-force oracle on
the same graphs and stops at the first disagreement, which is reported in
graph6 so it can be replayed.  Random suites draw from :class:`SplitMix64`
with an explicit seed.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable

from . import oracle
from .budget import BudgetExceeded, OracleBudget
from .chordal import is_chordal
from .families import cycle_graph
from .formats import to_graph6
from .generators import random_graph, random_tree
from .graph import Graph
from .rng import SplitMix64
from .strongcolor import cycle_strong_index, strong_chromatic_index, tree_strong_index
from .structures import (
    CatalogDisagreement,
    find_flower,
    is_withered,
    line_square_chordal_verdict,
    validate_flower,
)

SUITES = ("chordality", "flowers", "line-square", "strong-index")
FLOWER_TARGETS = range(4, 9)


@dataclass(frozen=True)
class SuiteResult:
    suite: str
    checked: int
    passed: bool
    counterexample: str | None = None
    detail: str = ""

    def as_dict(self) -> dict:
        return {
            "suite": self.suite,
            "checked": self.checked,
            "passed": self.passed,
            "counterexample_graph6": self.counterexample,
            "detail": self.detail,
        }

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.suite}: {self.checked} checked"
        if not self.passed:
            line += f"; counterexample {self.counterexample} ({self.detail})"
        return line


# A check returns None when production and oracle agree, else a description.
Check = Callable[[Graph, bool], "str | None"]


def check_chordality(g: Graph, fault: bool = False) -> str | None:
    got = is_chordal(g)
    if fault and g.m % 2:
        got = not got
    want = oracle.is_chordal_oracle(g, OracleBudget(cycles=max(14, g.n)))
    return None if got == want else f"is_chordal={got}, oracle={want}"


def check_line_square(g: Graph, fault: bool = False) -> str | None:
    try:
        verdict = line_square_chordal_verdict(g)
    except CatalogDisagreement as exc:
        return str(exc)
    if fault and g.m % 2:
        return f"injected fault: verdict {verdict.chordal} flipped"
    return None


def check_flowers(g: Graph, fault: bool = False) -> str | None:
    square = oracle.power(g, 2)
    budget = OracleBudget(cycles=max(14, g.n))
    for t in FLOWER_TARGETS:
        f = find_flower(g, t)
        found = f is not None
        if fault and g.m % 2:
            found = not found
        cycle = oracle.find_induced_cycle(square, t, budget)
        if found != (cycle is not None):
            return f"size {t}: find_flower={'found' if found else 'none'}, oracle cycle={cycle}"
        if f is not None:
            report = validate_flower(g, f)
            if not report.valid:
                return f"size {t}: invalid witness {report.violations}"
            if is_withered(g, f):
                return f"size {t}: witness is withered"
    return None


def check_tree_index(t: Graph, fault: bool = False) -> str | None:
    got = tree_strong_index(t)
    if fault and t.m % 2:
        got += 1
    want, _ = oracle.exact_chromatic_number(oracle.line_graph_square(t), OracleBudget(chi=max(16, t.m)))
    return None if got == want else f"tree index {got}, oracle {want}"


CHECKS: dict[str, Check] = {
    "chordality": check_chordality,
    "line-square": check_line_square,
    "flowers": check_flowers,
}


def _scan_codes(args: tuple[str, int, int, int, bool]) -> tuple[int, str | None, str]:
    suite, n, lo, hi, fault = args
    check = CHECKS[suite]
    for code in range(lo, hi):
        g = oracle.graph_from_code(n, code)
        problem = check(g, fault)
        if problem is not None:
            return code - lo + 1, to_graph6(g), problem
    return hi - lo, None, ""


def exhaustive(suite: str, n: int, workers: int = 1, fault: bool = False) -> SuiteResult:
    """Every labeled graph on ``n`` vertices; chunks go to worker processes
    when ``workers > 1``."""
    if not 0 <= n <= oracle.HARD_CAP:
        raise BudgetExceeded(f"exhaustive sweeps are capped at n = {oracle.HARD_CAP}")
    total = 1 << (n * (n - 1) // 2)
    chunks = max(1, workers * 8)
    step = -(-total // chunks)
    jobs = [(suite, n, lo, min(total, lo + step), fault) for lo in range(0, total, step)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_scan_codes, jobs))
    else:
        results = []
        for job in jobs:
            results.append(_scan_codes(job))
            if results[-1][1] is not None:
                break
    checked = 0
    for count, bad, why in results:
        checked += count
        if bad is not None:
            return SuiteResult(suite, checked, False, bad, why)
    return SuiteResult(suite, checked, True)


def random_graphs(
    suite: str, samples: int, seed: int, n_range: tuple[int, int], p_range: tuple[float, float], fault: bool = False
) -> SuiteResult:
    """``samples`` graphs with ``n`` and edge probability drawn uniformly."""
    check = CHECKS[suite]
    rng = SplitMix64(seed)
    lo, hi = n_range
    for i in range(samples):
        n = rng.randint(lo, hi)
        p = p_range[0] + (p_range[1] - p_range[0]) * rng.random()
        g = random_graph(rng, n, p)
        problem = check(g, fault)
        if problem is not None:
            return SuiteResult(suite, i + 1, False, to_graph6(g), problem)
    return SuiteResult(suite, samples, True)


def strong_index_suite(max_cycle: int, samples: int, seed: int, fault: bool = False) -> SuiteResult:
    """Cycles ``C_3 .. C_max_cycle`` through the full pipeline against the
    closed form, then random trees against the oracle."""
    budget = OracleBudget.from_env()
    budget = budget.scaled(chi=max(budget.chi, max_cycle))
    checked = 0
    for n in range(3, max_cycle + 1):
        c = cycle_graph(n)
        got = strong_chromatic_index(c, budget)
        count = got.color_count + (1 if fault and n % 2 else 0)
        checked += 1
        if count != cycle_strong_index(n) or not got.exact:
            return SuiteResult(
                "strong-index", checked, False, to_graph6(c),
                f"C_{n}: pipeline {count} (exact={got.exact}), closed form {cycle_strong_index(n)}",
            )
    rng = SplitMix64(seed)
    for _ in range(samples):
        t = random_tree(rng, rng.randint(2, 12))
        problem = check_tree_index(t, fault)
        checked += 1
        if problem is not None:
            return SuiteResult("strong-index", checked, False, to_graph6(t), problem)
    return SuiteResult("strong-index", checked, True)


def run_suite(
    suite: str,
    n: int | None = None,
    samples: int = 0,
    seed: int = 0,
    workers: int = 1,
    fault: bool = False,
) -> SuiteResult:
    """CLI entry: exhaustive over ``n`` when ``samples`` is 0, else random.

    Random graph suites draw ``n`` uniformly from 4.. ``n`` and ``p`` from
    [0.1, 0.5].
    """
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    if suite == "strong-index":
        return strong_index_suite(n or 18, samples, seed, fault)
    default_n = {"chordality": 6, "line-square": 6, "flowers": 6}[suite]
    n = default_n if n is None else n
    if samples == 0:
        return exhaustive(suite, n, workers, fault)
    return random_graphs(suite, samples, seed, (min(4, n), n), (0.1, 0.5), fault)
