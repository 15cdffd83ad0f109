"""``chordal-powers``: analyze graphs, detect witnesses, run oracle sweeps.

Exit codes: 0 ok, 1 a property check failed, 2 input error, 3 a budget was
exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Sequence

from .budget import BUDGET_ENV, BudgetExceeded, OracleBudget
from .checks import SUITES, run_suite
from .chordal import NotChordalError
from .formats import FORMATS, ParseError, guess_format, read_graph
from .graph import Graph, GraphError
from .report import build_report, dumps, to_text
from .structures import (
    find_fertile_sprout,
    find_flower,
    find_sunflower,
    enumerate_flowers,
    line_square_chordal_verdict,
    line_square_perfection_necessary,
    validate_flower,
    validate_sprout,
    validate_sunflower,
)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3

STRUCTURES = ("flower", "sunflower", "sprout", "line-square-chordal", "line-square-perfect-necessary")
GRAPH_SUFFIXES = (".g6", ".graph6", ".col", ".dimacs", ".txt", ".edges", ".el")


def _budget(raw: str | None) -> OracleBudget:
    if raw is None:
        return OracleBudget.from_env()
    try:
        return OracleBudget.parse(raw)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _load(path: str, fmt: str | None) -> tuple[Graph, dict]:
    fmt = fmt or guess_format(path)
    g = read_graph(path, fmt)
    return g, {"path": path, "format": fmt}


# analyze


def _analyze_one(args: tuple[str, str | None, int | None, OracleBudget]) -> tuple[str, int, dict | str]:
    path, fmt, k_max, budget = args
    try:
        g, source = _load(path, fmt)
        return path, EXIT_OK, build_report(g, source, k_max, budget)
    except (ParseError, GraphError, OSError, UnicodeDecodeError) as exc:
        return path, EXIT_INPUT, f"input error: {exc}"
    except BudgetExceeded as exc:
        return path, EXIT_BUDGET, f"budget exceeded: {exc}"


def _graph_files(directory: Path) -> list[str]:
    return sorted(str(p) for p in directory.iterdir() if p.is_file() and p.suffix.lower() in GRAPH_SUFFIXES)


def cmd_analyze(ns: argparse.Namespace) -> int:
    budget = _budget(ns.oracle_budget)
    if ns.k_max is not None and ns.k_max < 1:
        print("input error: --k-max must be at least 1", file=sys.stderr)
        return EXIT_INPUT
    target = Path(ns.path)
    if target.is_dir():
        return _analyze_batch(ns, target, budget)
    _, code, out = _analyze_one((ns.path, ns.format, ns.k_max, budget))
    if code != EXIT_OK:
        print(out, file=sys.stderr)
        return code
    assert isinstance(out, dict)
    sys.stdout.write(to_text(out) if ns.text else dumps(out))
    return EXIT_OK


def _analyze_batch(ns: argparse.Namespace, directory: Path, budget: OracleBudget) -> int:
    files = _graph_files(directory)
    jobs = [(f, ns.format, ns.k_max, budget) for f in files]
    if ns.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=ns.workers) as pool:
            results = list(pool.map(_analyze_one, jobs))
    else:
        results = [_analyze_one(j) for j in jobs]
    out_dir = Path(ns.out) if ns.out else None
    if out_dir:
        out_dir.mkdir(parents=True, exist_ok=True)
    rollup = {"files": len(results), "ok": 0, "input_errors": 0, "budget_exceeded": 0, "reports": []}
    for path, code, out in results:
        entry: dict = {"path": path, "exit": code}
        if code == EXIT_OK:
            assert isinstance(out, dict)
            rollup["ok"] += 1
            entry["chordal"] = out["chordal"]["value"]
            entry["k0"] = out["power_profile"]["k0"]["value"]
            if out_dir:
                name = Path(path).name + (".txt" if ns.text else ".json")
                (out_dir / name).write_text(to_text(out) if ns.text else dumps(out))
        else:
            rollup["input_errors" if code == EXIT_INPUT else "budget_exceeded"] += 1
            entry["error"] = out
        rollup["reports"].append(entry)
    if ns.text:
        for e in rollup["reports"]:
            status = f"chordal={e['chordal']} k0={e['k0']}" if e["exit"] == EXIT_OK else e["error"]
            print(f"{e['path']}: {status}")
        print(f"{rollup['ok']}/{rollup['files']} analyzed")
    else:
        sys.stdout.write(json.dumps(rollup, sort_keys=True, indent=2) + "\n")
    return EXIT_OK if rollup["ok"] == rollup["files"] else max(r[1] for r in results)


# detect


def cmd_detect(ns: argparse.Namespace) -> int:
    try:
        g, _ = _load(ns.path, ns.format)
    except (ParseError, GraphError, OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    needs_size = ns.structure in ("flower", "sunflower", "sprout")
    if needs_size and (ns.size is None or ns.size < 4):
        print("input error: --size of at least 4 is required for this structure", file=sys.stderr)
        return EXIT_INPUT
    budget = _budget(ns.oracle_budget)
    try:
        result = _detect(g, ns.structure, ns.size, ns.all, budget)
    except NotChordalError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    if ns.text:
        print("none" if result is None else json.dumps(result, sort_keys=True))
    else:
        sys.stdout.write(json.dumps({"structure": ns.structure, "size": ns.size, "result": result},
                                    sort_keys=True, indent=2) + "\n")
    return EXIT_OK


def _detect(g: Graph, structure: str, size: int | None, all_: bool, budget: OracleBudget):
    if structure == "flower":
        if all_:
            found = [
                {"witness": f.as_dict(), "conditions": validate_flower(g, f).as_dict()}
                for f in enumerate_flowers(g, size, budget)
            ]
            return found or None
        f = find_flower(g, size)
        return None if f is None else {"witness": f.as_dict(), "conditions": validate_flower(g, f).as_dict()}
    if structure == "sunflower":
        s = find_sunflower(g, size, budget, allow_nonchordal=True)
        return None if s is None else {"witness": s.as_dict(), "conditions": validate_sunflower(g, s).as_dict()}
    if structure == "sprout":
        s = find_fertile_sprout(g, size)
        return None if s is None else {"witness": s.as_dict(), "conditions": validate_sprout(g, s).as_dict()}
    if structure == "line-square-chordal":
        v = line_square_chordal_verdict(g)
        return None if v.witness is None else v.as_dict()
    if structure == "line-square-perfect-necessary":
        c = line_square_perfection_necessary(g, budget)
        return None if c.witness is None else c.as_dict()
    raise ValueError(structure)


# oracle-check


def cmd_oracle_check(ns: argparse.Namespace) -> int:
    if ns.samples < 0 or (ns.n is not None and ns.n < 1) or ns.workers < 1:
        print("input error: --n, --samples and --workers must be positive", file=sys.stderr)
        return EXIT_INPUT
    try:
        result = run_suite(ns.suite, ns.n, ns.samples, ns.seed, ns.workers, ns.inject_fault)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    if ns.json:
        sys.stdout.write(json.dumps(result.as_dict(), sort_keys=True) + "\n")
    else:
        print(result.summary())
    return EXIT_OK if result.passed else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="chordal-powers",
        description=f"Chordality, graph powers and strong colorings. {BUDGET_ENV} overrides solver budgets.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="full report for a graph file or every graph file in a directory")
    a.add_argument("path")
    a.add_argument("--format", choices=FORMATS)
    a.add_argument("--k-max", type=int)
    a.add_argument("--oracle-budget", help="N, or a list like chi=18,cycles=16")
    out = a.add_mutually_exclusive_group()
    out.add_argument("--json", action="store_true", help="JSON report (default)")
    out.add_argument("--text", action="store_true", help="plain text summary")
    a.add_argument("--workers", type=int, default=1, help="parallel workers in directory mode")
    a.add_argument("--out", help="directory mode: also write one report file per input here")
    a.set_defaults(func=cmd_analyze)

    d = sub.add_parser("detect", help="search for one structure")
    d.add_argument("path")
    d.add_argument("--structure", choices=STRUCTURES, required=True)
    d.add_argument("--size", type=int)
    d.add_argument("--format", choices=FORMATS)
    d.add_argument("--all", action="store_true", help="flowers: enumerate every witness")
    d.add_argument("--oracle-budget")
    d.add_argument("--text", action="store_true")
    d.set_defaults(func=cmd_detect)

    o = sub.add_parser("oracle-check", help="compare production routines against brute force")
    o.add_argument("--suite", choices=SUITES, required=True)
    o.add_argument("--n", type=int, help="vertex count (exhaustive) or maximum (random); cycle length cap")
    o.add_argument("--samples", type=int, default=0, help="random samples; 0 means exhaustive")
    o.add_argument("--seed", type=int, default=0)
    o.add_argument("--workers", type=int, default=1)
    o.add_argument("--json", action="store_true")
    o.add_argument("--inject-fault", action="store_true", help="corrupt production answers to exercise failure reporting")
    o.set_defaults(func=cmd_oracle_check)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return ns.func(ns)
    except argparse.ArgumentTypeError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
