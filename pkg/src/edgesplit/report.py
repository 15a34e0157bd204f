"""JSON reports and their independent re-verification.

One schema serves every subcommand; ``payload.kind`` tags the result.  The
``verification`` block is always recomputed from the payload by
:func:`verification_block`, and :func:`verify_report` recomputes it again
from scratch against the input graph.
"""

from __future__ import annotations

import json
from typing import Any

from edgesplit.budget import Budget
from edgesplit.coloring import EdgeColoring, validate
from edgesplit.decompose import Decomposition, part_degrees, verify_decomposition
from edgesplit.mgf import digest, parse_mgf
from edgesplit.multigraph import Multigraph
from edgesplit.oracle import (
    ProbeOutcome,
    chromatic_index,
    max_delta_colorable_size,
    probe_conjecture_pq,
    probe_matching_cover,
)

SCHEMA = "edgesplit-report/1"


def dumps(report: dict[str, Any]) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def oracle_facts(g: Multigraph, budget: Budget) -> dict[str, Any]:
    ci = chromatic_index(g, budget)
    label, k = ci.label(g)
    return {"Delta": g.max_degree, "mu": g.multiplicity, "chi": ci.chi, "k": k, "class": label.value}


def _part_pairs(cert: EdgeColoring) -> list[list[int]]:
    return [[e, c] for e, c in enumerate(cert.colors) if c]


def decomposition_payload(dec: Decomposition, mode: str) -> dict[str, Any]:
    return {
        "kind": "decomposition",
        "mode": mode,
        "method": dec.method,
        "part1": list(dec.part1),
        "part2": list(dec.part2),
        "cert1": {"palette": dec.cert1.palette, "colors": _part_pairs(dec.cert1)},
        "cert2": {"palette": dec.cert2.palette, "colors": _part_pairs(dec.cert2)},
        "targets": list(dec.targets),
        "certified": dec.certified,
        "counters": dec.counters,
    }


def decomposition_from_payload(g: Multigraph, payload: dict[str, Any]) -> Decomposition:
    c1 = EdgeColoring.from_pairs(g, payload["cert1"]["palette"], payload["cert1"]["colors"])
    c2 = EdgeColoring.from_pairs(g, payload["cert2"]["palette"], payload["cert2"]["colors"])
    return Decomposition(g, tuple(payload["part1"]), tuple(payload["part2"]), c1, c2,
                         tuple(payload["targets"]), payload.get("method", ""),
                         payload.get("counters", {}), payload.get("certified", True))


def _descent_ok(trace: list[int]) -> bool:
    return all(b < a for a, b in zip(trace, trace[1:]))


def _counter_checks(payload: dict[str, Any]) -> dict[str, Any]:
    c = payload.get("counters") or {}
    out: dict[str, Any] = {}
    if "E1_sizes" in c:
        out["E1_final"] = c["E1_sizes"][-1]
        out["E1_decreasing"] = _descent_ok(c["E1_sizes"])
    if "t_trace" in c:
        out["t_final"] = c["t_trace"][-1]
        out["t_decreasing"] = _descent_ok(c["t_trace"])
    if c.get("odd_cycle_trace"):
        out["odd_cycles_final"] = c["odd_cycle_trace"][-1]
        out["odd_cycles_decreasing"] = _descent_ok(c["odd_cycle_trace"])
    levels = c.get("levels")
    if levels is not None:
        c1 = [lv["c1_sizes"] for lv in levels if "c1_sizes" in lv]
        out["recursion_depth"] = len(levels)
        out["c1_decreasing"] = all(_descent_ok(t) for t in c1)
        out["c1_final"] = [t[-1] for t in c1]
        out["max_aux_swaps"] = max((a for lv in levels for a in lv.get("aux_swaps", [])), default=0)
    return out


def verification_block(g: Multigraph, payload: dict[str, Any], facts: dict[str, Any],
                       budget: Budget) -> dict[str, Any]:
    kind = payload["kind"]
    problems: list[str] = []
    block: dict[str, Any] = {}
    if kind == "decomposition":
        dec = decomposition_from_payload(g, payload)
        res = verify_decomposition(g, dec, budget)
        problems += res["problems"]
        block["part1"], block["part2"] = res["part1"], res["part2"]
        block["counters"] = _counter_checks(payload)
        for key, val in block["counters"].items():
            if key.endswith("_decreasing") and not val:
                problems.append(f"descent counter {key[:-11]} is not strictly decreasing")
        p1, p2 = res["part1"], res["part2"]
        mode = payload["mode"]
        if mode == "pair":
            if (p1["Delta"], p2["Delta"]) != (facts["Delta"], facts["k"]):
                problems.append(f"part degrees ({p1['Delta']}, {p2['Delta']}) != (Delta, k) = "
                                f"({facts['Delta']}, {facts['k']})")
            if not (p1["class_I"] and p2["class_I"]):
                problems.append("a part is not class I")
        elif mode == "split":
            if not (p1["class_I"] and p2["class_I"]):
                problems.append("a part is not class I")
            if p1["Delta"] + p2["Delta"] != facts["chi"]:
                problems.append("part degrees do not add up to the chromatic index")
        elif mode == "maxsub":
            best = max_delta_colorable_size(g, budget)
            block["max_subgraph_size"] = best
            if p1["size"] != best:
                problems.append(f"part1 has {p1['size']} edges, maximum Delta-colorable size is {best}")
            if p1["chi"] > facts["Delta"]:
                problems.append("part1 is not Delta-colorable")
            if p2["Delta"] > facts["mu"]:
                problems.append(f"part2 maximum degree {p2['Delta']} exceeds mu = {facts['mu']}")
            if facts["mu"] <= 2 and facts["chi"] == facts["Delta"] + facts["mu"]:
                if not (p2["chi"] == p2["Delta"] == facts["mu"]):
                    problems.append("part2 should satisfy chi' = Delta = mu")
        else:
            problems.append(f"unknown decomposition mode {mode!r}")
    elif kind == "coloring":
        if payload["outcome"] == "found":
            phi = EdgeColoring.from_pairs(g, payload["palette"], payload["coloring"])
            bad = validate(phi)
            if bad is not None:
                problems.append(f"coloring improper: {bad}")
            if not phi.is_total():
                problems.append("coloring leaves edges uncolored")
            used = len(phi.used_colors())
            block["colors_used"] = used
            limit = payload.get("k") or facts["Delta"] + facts["mu"]
            if used > limit:
                problems.append(f"coloring uses {used} colors, more than {limit}")
        elif payload["outcome"] == "infeasible":
            if payload["k"] >= facts["chi"]:
                problems.append(f"claimed infeasible with {payload['k']} colors but chi' = {facts['chi']}")
    elif kind == "chi":
        phi = EdgeColoring.from_pairs(g, payload["chi"] or 1, payload["certificate"])
        if validate(phi) is not None or not phi.is_total():
            problems.append("certificate is not a total proper coloring")
        if payload["chi"] != facts["chi"]:
            problems.append(f"claimed chi' {payload['chi']} != recomputed {facts['chi']}")
        block["certificate_colors"] = len(phi.used_colors())
    elif kind == "probe":
        probe = payload["probe"]
        if probe["outcome"] == ProbeOutcome.VERIFIED.value and probe["conjecture"] == "pq":
            w = probe["witness"]
            p, q = probe["params"]["p"], probe["params"]["q"]
            phi = EdgeColoring.from_pairs(g, p + q, w["coloring"])
            if validate(phi) is not None or not phi.is_total():
                problems.append("probe witness coloring is not total and proper")
            d1 = max(part_degrees(g, w["part1"]), default=0)
            d2 = max(part_degrees(g, w["part2"]), default=0)
            if (d1, d2) != (p, q):
                problems.append(f"probe witness part degrees ({d1}, {d2}) != ({p}, {q})")
            block["witness_degrees"] = [d1, d2]
    else:
        problems.append(f"unknown payload kind {kind!r}")
    block["ok"] = not problems
    block["problems"] = problems
    return block


def make_report(command: str, g: Multigraph, payload: dict[str, Any], args: dict[str, Any],
                seed: int, budget: Budget, facts: dict[str, Any] | None = None) -> dict[str, Any]:
    facts = facts if facts is not None else oracle_facts(g, budget)
    report = {
        "schema": SCHEMA,
        "command": command,
        "args": args,
        "input": {"digest": digest(g), "n": g.n, "m": g.m},
        "oracle": facts,
        "payload": payload,
        "seed": seed,
    }
    report["verification"] = verification_block(g, payload, facts, budget)
    report["budget"] = {"limit": budget.limit, "used": budget.used}
    return report


def _replay_probe(g: Multigraph, probe: dict[str, Any], budget: Budget) -> dict[str, Any]:
    if probe["conjecture"] == "pq":
        again = probe_conjecture_pq(g, probe["params"]["p"], probe["params"]["q"], budget)
    else:
        again = probe_matching_cover(g, budget)
    return again.to_dict()


def verify_report(g: Multigraph, report: dict[str, Any], budget: Budget | None = None) -> list[str]:
    """Recompute every claim in ``report``; returns the violated invariants."""
    budget = budget or Budget()
    problems: list[str] = []
    if report.get("schema") != SCHEMA:
        problems.append(f"unknown schema {report.get('schema')!r}")
        return problems
    if report["input"]["digest"] != digest(g):
        problems.append("input digest mismatch: report belongs to a different graph")
        return problems
    facts = oracle_facts(g, budget)
    for key, val in facts.items():
        if report["oracle"].get(key) != val:
            problems.append(f"oracle fact {key}: report says {report['oracle'].get(key)!r}, recomputed {val!r}")
    payload = report["payload"]
    try:
        block = verification_block(g, payload, facts, budget)
    except (KeyError, TypeError, ValueError) as exc:
        return problems + [f"malformed payload: {exc}"]
    problems += block["problems"]
    if payload["kind"] == "probe":
        again = _replay_probe(g, payload["probe"], budget)
        if again["outcome"] != payload["probe"]["outcome"]:
            problems.append(f"probe replay outcome {again['outcome']} != reported {payload['probe']['outcome']}")
    claimed = {k: v for k, v in report.get("verification", {}).items()}
    if claimed != block:
        problems.append("stored verification block differs from recomputation")
    return problems


def load_report(text: str) -> dict[str, Any]:
    return json.loads(text)


def graph_from_report(report: dict[str, Any]) -> Multigraph | None:
    mgf = report.get("payload", {}).get("probe", {}).get("instance", {}).get("mgf")
    return parse_mgf(mgf) if mgf else None
