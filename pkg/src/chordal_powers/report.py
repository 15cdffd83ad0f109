"""The analysis report: one JSON document per input graph.

Every number is wrapped as ``{"value": x, "tag": t}`` with ``t`` one of
exact, lower-bound, upper-bound, conjectured.  Keys are sorted on output and
nothing time- or host-dependent is recorded, so equal inputs and flags give
byte-identical reports.  The layout is described in ``docs/report-schema.md``.
"""

from __future__ import annotations

import json
from typing import Any

from .budget import OracleBudget
from .chordal import fill_in, maximal_cliques_chordal, mcs
from .cliquetree import mcct
from .graph import Graph
from .powers import CONJECTURED, EXACT, LOWER, UPPER, Bounded, degree_power_bound, moore_bound, power_masks, power_profile
from .strongcolor import conjectured_strong_index_bound, k_strong_chromatic_number, sigma_max, strong_chromatic_index
from .structures import find_flower, first_induced_cycle, line_square_chordal_direct, line_square_chordal_verdict

SCHEMA = "chordal-powers/analysis"
SCHEMA_VERSION = 1


def tagged(value: Any, tag: str = EXACT) -> dict:
    return {"value": value, "tag": tag}


def _bounded(b: Bounded) -> dict:
    return b.as_dict()


def _coloring(c) -> dict:
    return {"colors_used": tagged(c.color_count, EXACT if c.exact else UPPER), "bounds": _bounded(c.bounds)}


def build_report(g: Graph, source: dict, k_max: int | None = None, budget: OracleBudget | None = None) -> dict:
    budget = budget or OracleBudget.from_env()
    res = mcct(g)
    report: dict[str, Any] = {
        "schema": SCHEMA,
        "version": SCHEMA_VERSION,
        "input": {**source, "n": tagged(g.n), "m": tagged(g.m)},
        "chordal": tagged(res.chordal),
    }
    if res.chordal:
        assert res.tree is not None
        report["pes"] = list(res.ordering.sigma)
        report["clique_tree"] = {
            "width": tagged(res.tree.width),
            "bags": tagged(len(res.tree.nodes)),
            "tree": res.tree.as_dict(),
        }
        report["treewidth"] = tagged(res.tree.width)
    else:
        report["pes"] = None
        report["clique_tree"] = None
        filled = fill_in(g).supergraph
        width = maximal_cliques_chordal(filled, mcs(filled)).max_size() - 1
        report["treewidth"] = tagged(width, UPPER)

    profile = power_profile(g, k_max, budget)
    report["power_profile"] = {
        "k0": tagged(profile.k0),
        "diameter": tagged(profile.diameter),
        "truncated": profile.truncated,
        "rows": [
            {
                "k": r.k,
                "edges": tagged(r.edges),
                "chordal": tagged(r.chordal),
                "complete_components": tagged(r.complete_components),
                "omega": _bounded(r.omega),
                "chi": _bounded(r.chi),
            }
            for r in profile.rows
        ],
    }

    report["structures"] = _structures(g, budget)
    report["strong_coloring"] = {
        "chi_2": _coloring(k_strong_chromatic_number(g, 2, budget)),
        "strong_index": _coloring(strong_chromatic_index(g, budget)),
    }
    d = g.max_degree()
    conj = conjectured_strong_index_bound(d)
    report["bounds"] = {
        "chi_2_degree_upper": tagged(degree_power_bound(d, 2), UPPER),
        "chi_2_moore_upper": tagged(moore_bound(d, 2), UPPER),
        "strong_index_pair_degree_lower": tagged(sigma_max(g), LOWER),
        "strong_index_conjectured_upper": tagged(conj.upper, CONJECTURED),
    }
    return report


def _structures(g: Graph, budget: OracleBudget) -> dict:
    out: dict[str, Any] = {}
    if g.n <= budget.cycles:
        cycle = first_induced_cycle(power_masks(g.masks, 2), 4)
        if cycle is None:
            out["square_flower"] = None
        else:
            f = find_flower(g, len(cycle))
            out["square_flower"] = {"size": len(cycle), "witness": f.as_dict() if f else None}
        out["line_square"] = line_square_chordal_verdict(g).as_dict()
    else:
        out["square_flower"] = "skipped: over the cycle search budget"
        out["line_square"] = {"chordal": line_square_chordal_direct(g), "witness": "skipped: over budget"}
    return out


def dumps(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def to_text(report: dict) -> str:
    """Fixed-order plain text summary."""

    def val(x: dict) -> str:
        if "value" in x:
            return f"{x['value']} ({x['tag']})"
        return f"[{x['lower']['value']}, {x['upper']['value']}] (bounds)"

    lines = [
        f"graph: n={report['input']['n']['value']} m={report['input']['m']['value']}",
        f"chordal: {report['chordal']['value']}",
        f"treewidth: {val(report['treewidth'])}",
        f"k0: {report['power_profile']['k0']['value']}",
        f"diameter: {report['power_profile']['diameter']['value']}",
    ]
    for r in report["power_profile"]["rows"]:
        lines.append(
            f"power {r['k']}: edges={r['edges']['value']} chordal={r['chordal']['value']}"
            f" omega={val(r['omega'])} chi={val(r['chi'])}"
        )
    sc = report["strong_coloring"]
    lines.append(f"chi_2: {val(sc['chi_2']['bounds'])}")
    lines.append(f"strong index: {val(sc['strong_index']['bounds'])}")
    ls = report["structures"]["line_square"]
    lines.append(f"line graph square chordal: {ls['chordal']}")
    for key, b in report["bounds"].items():
        lines.append(f"{key}: {val(b)}")
    return "\n".join(lines) + "\n"

