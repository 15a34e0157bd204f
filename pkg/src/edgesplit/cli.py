"""Command-line front end.

Every subcommand except ``gen`` prints one JSON report on standard output.
Exit codes: 0 success or verified, 1 input error or failed verification,
2 budget exhausted, 3 counterexample found by a probe.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Any, Sequence

from edgesplit.budget import DEFAULT_BUDGET, Budget, BudgetExhausted
from edgesplit.colorizer import Outcome, color_exact, color_vizing
from edgesplit.decompose import (
    DecompositionError,
    decompose_class1_pair,
    decompose_max_subgraph,
    split_minimal_class,
)
from edgesplit.mgf import MgfError, read_mgf, serialize_mgf
from edgesplit.multigraph import GraphError, Multigraph
from edgesplit.oracle import (
    ProbeOutcome,
    chromatic_index,
    clear_cache,
    probe_conjecture_pq,
    probe_matching_cover,
)
from edgesplit.report import decomposition_payload, dumps, make_report, verify_report
from edgesplit.structures import make_shannon, make_T, petersen, random_multigraph

EXIT_OK, EXIT_INPUT, EXIT_BUDGET, EXIT_COUNTEREXAMPLE = 0, 1, 2, 3


class InputError(Exception):
    pass


def _global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    # declared on the root and on every subparser so flags may follow the subcommand
    kw: dict[str, Any] = {"default": argparse.SUPPRESS} if suppress else {}
    parser.add_argument("--seed", type=int, help="random seed (default 0)", **kw)
    parser.add_argument("--budget", type=int, help=f"search-node budget (default {DEFAULT_BUDGET})", **kw)
    parser.add_argument("--json", action=argparse.BooleanOptionalAction,
                        help="emit the JSON report (default on)", **kw)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="edgesplit", description="Edge colorings and class I decompositions of multigraphs.")
    _global_flags(parser, suppress=False)
    parser.set_defaults(seed=0, budget=DEFAULT_BUDGET, json=True)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_)
        _global_flags(p, suppress=True)
        return p

    p = add("chi", "chromatic index with certificate")
    p.add_argument("file")
    p = add("color", "proper coloring with at most K colors (Delta + mu fan coloring if omitted)")
    p.add_argument("file")
    p.add_argument("--k", type=int)
    p = add("decompose", "split into two class I parts")
    p.add_argument("file")
    p.add_argument("--mode", choices=["split", "maxsub", "pair"], default="pair")
    p = add("probe", "run a conjecture probe")
    p.add_argument("file")
    p.add_argument("--conjecture", choices=["pq", "matching"], required=True)
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p = add("verify", "recompute every claim in a report")
    p.add_argument("file")
    p.add_argument("report")

    gen = add("gen", "print a named or random multigraph in MGF")
    gsub = gen.add_subparsers(dest="family", required=True)

    def family(name: str) -> argparse.ArgumentParser:
        f = gsub.add_parser(name)
        _global_flags(f, suppress=True)
        return f

    g = family("shannon")
    g.add_argument("--d", type=int, required=True)
    g = family("t")
    for flag in ("--r", "--s", "--t"):
        g.add_argument(flag, type=int, required=True)
    family("petersen")
    g = family("random")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--m", type=int, required=True)
    g.add_argument("--mu", type=int, required=True)
    return parser


def _load(path: str) -> Multigraph:
    try:
        return read_mgf(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc


def _gen(args: argparse.Namespace) -> Multigraph:
    if args.family == "shannon":
        return make_shannon(args.d)
    if args.family == "t":
        return make_T(args.r, args.s, args.t)
    if args.family == "petersen":
        return petersen()
    if args.n < 1 or args.m < 0 or args.mu < 1:
        raise InputError("random graphs need n >= 1, m >= 0, mu >= 1")
    return random_multigraph(random.Random(args.seed), args.n, args.m, args.mu)


def _cmd_chi(g: Multigraph, args, budget: Budget) -> tuple[dict, int]:
    ci = chromatic_index(g, budget)
    payload = {"kind": "chi", "chi": ci.chi, "certificate": ci.certificate.to_pairs(),
               "lower_bound": ci.lower_bound, "upper_bound": ci.upper_bound}
    return make_report("chi", g, payload, {}, args.seed, budget), EXIT_OK


def _cmd_color(g: Multigraph, args, budget: Budget) -> tuple[dict, int]:
    if args.k is None:
        phi = color_vizing(g)
        payload = {"kind": "coloring", "method": "vizing", "k": None, "outcome": "found",
                   "palette": phi.palette, "coloring": phi.to_pairs(), "nodes": 0}
    else:
        if args.k < 0:
            raise InputError("--k must be non-negative")
        res = color_exact(g, args.k, budget)
        if res.outcome is Outcome.BUDGET_EXHAUSTED:
            raise BudgetExhausted(f"no decision for K={args.k} within {budget.limit} nodes")
        payload = {"kind": "coloring", "method": "exact", "k": args.k, "outcome": res.outcome.value,
                   "palette": res.coloring.palette if res.coloring else args.k,
                   "coloring": res.coloring.to_pairs() if res.coloring else None,
                   "nodes": res.nodes, "reason": res.reason}
    return make_report("color", g, payload, {"k": args.k}, args.seed, budget), EXIT_OK


def _cmd_decompose(g: Multigraph, args, budget: Budget) -> tuple[dict, int]:
    run = {"pair": decompose_class1_pair, "maxsub": decompose_max_subgraph,
           "split": split_minimal_class}[args.mode]
    dec = run(g, budget)
    payload = decomposition_payload(dec, args.mode)
    report = make_report("decompose", g, payload, {"mode": args.mode}, args.seed, budget)
    return report, EXIT_OK if report["verification"]["ok"] else EXIT_INPUT


def _cmd_probe(g: Multigraph, args, budget: Budget) -> tuple[dict, int]:
    if args.conjecture == "pq":
        if args.p is None or args.q is None:
            raise InputError("--conjecture pq needs --p and --q")
        rep = probe_conjecture_pq(g, args.p, args.q, budget)
        params = {"conjecture": "pq", "p": args.p, "q": args.q}
    else:
        rep = probe_matching_cover(g, budget)
        params = {"conjecture": "matching"}
    payload = {"kind": "probe", "probe": rep.to_dict()}
    report = make_report("probe", g, payload, params, args.seed, budget)
    code = {ProbeOutcome.VERIFIED: EXIT_OK, ProbeOutcome.COUNTEREXAMPLE: EXIT_COUNTEREXAMPLE,
            ProbeOutcome.BUDGET_EXHAUSTED: EXIT_BUDGET}[rep.outcome]
    return report, code


def _cmd_verify(g: Multigraph, args, budget: Budget) -> tuple[dict, int]:
    try:
        with open(args.report, encoding="utf-8") as fh:
            report = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {args.report}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"report is not JSON: {exc}") from exc
    if not isinstance(report, dict):
        raise InputError("report must be a JSON object")
    try:
        problems = verify_report(g, report, budget)
    except (KeyError, TypeError, ValueError) as exc:
        problems = [f"malformed report: {exc!r}"]
    out = {"command": "verify", "ok": not problems, "problems": problems,
           "verified_command": report.get("command"), "budget": {"limit": budget.limit, "used": budget.used}}
    return out, EXIT_OK if not problems else EXIT_INPUT


COMMANDS = {"chi": _cmd_chi, "color": _cmd_color, "decompose": _cmd_decompose,
            "probe": _cmd_probe, "verify": _cmd_verify}


def _error(kind: str, message: str, code: int) -> tuple[dict, int]:
    return {"error": {"type": kind, "message": message, "exit_code": code}}, code


def _summary(out: dict[str, Any]) -> str:
    if "error" in out:
        return f"error ({out['error']['type']}): {out['error']['message']}"
    if out.get("command") == "verify":
        return "verified" if out["ok"] else "verification failed: " + "; ".join(out["problems"])
    o = out["oracle"]
    head = f"{out['command']}: Delta={o['Delta']} mu={o['mu']} chi'={o['chi']} {o['class']} k={o['k']}"
    p = out["payload"]
    if p["kind"] == "decomposition":
        v = out["verification"]
        head += f"; parts {v['part1']['size']}+{v['part2']['size']} edges, ok={v['ok']}"
    elif p["kind"] == "probe":
        head += f"; probe {p['probe']['conjecture']}: {p['probe']['outcome']}"
    elif p["kind"] == "coloring":
        head += f"; coloring {p['outcome']}"
    return head


def run(argv: Sequence[str] | None = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    clear_cache()
    budget = Budget(args.budget)
    try:
        if args.budget < 1:
            raise InputError("--budget must be positive")
        if args.command == "gen":
            stdout.write(serialize_mgf(_gen(args)))
            return EXIT_OK
        g = _load(args.file)
        out, code = COMMANDS[args.command](g, args, budget)
    except MgfError as exc:
        out, code = _error("mgf", str(exc), EXIT_INPUT)
        out["error"]["line"] = exc.line
    except (InputError, GraphError, DecompositionError, ValueError) as exc:
        out, code = _error("input", str(exc), EXIT_INPUT)
    except BudgetExhausted as exc:
        out, code = _error("budget_exhausted", str(exc), EXIT_BUDGET)
        out["error"]["budget"] = {"limit": budget.limit, "used": budget.used}
    if args.json:
        stdout.write(dumps(out))
    else:
        stdout.write(_summary(out) + "\n")
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
