"""Command-line entry point ``reflexqec``.

Exit status: 0 on success or all checks passing, 1 when a check fails,
2 on any error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional

from .cssbridge import phi_on_stabilizer
from .errors import ReflexError
from .formats import (
    check_same_space,
    format_amplitudes,
    format_code,
    format_pairs,
    format_report,
    parse_code,
    parse_error_set,
)
from .graphs import build_avoidance_graph, build_luc_graph, edge_intersection, export_dot
from .pauli import STATE_CAP
from .reflexive import ReflexiveStabilizer, build_codewords
from .search import SearchConfig, heuristic_search, minimal_physical_qudits
from .verify import RULE_ORDER, kl_numeric, run_rules

_SEARCH_RULES = {"corollary": "corollary", "main": "main_theorem", "general": "general_theorem"}


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _load_errors(path: str):
    E, warnings = parse_error_set(_read(path))
    for w in warnings:
        print(f"warning: {path}: {w}", file=sys.stderr)
    return E


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="reflexqec", description="Reflexive stabilizer code toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("avoid-graph", help="DOT of the error avoidance graph")
    p.add_argument("errors")
    p.add_argument("--out")

    p = sub.add_parser("luc-graph", help="DOT of the code's LUC graph")
    p.add_argument("code")
    p.add_argument("--errors", help="highlight edges shared with this error set")
    p.add_argument("--out")

    p = sub.add_parser("codewords", help="dense codeword amplitudes")
    p.add_argument("code")
    p.add_argument("--cap-dim", type=int, default=STATE_CAP)
    p.add_argument("--out")

    p = sub.add_parser("check", help="verify that a code corrects an error set")
    p.add_argument("code")
    p.add_argument("errors")
    p.add_argument("--rule", choices=[*RULE_ORDER, "all"], default="all")
    p.add_argument("--cap-dim", type=int, default=STATE_CAP)
    p.add_argument("--out")

    p = sub.add_parser("search", help="search for a code correcting an error set")
    p.add_argument("errors")
    p.add_argument("--strategy", choices=["greedy", "exhaustive"], default="greedy")
    p.add_argument("--rule", choices=sorted(_SEARCH_RULES), default="main")
    p.add_argument("--out")

    p = sub.add_parser("css-map", help="map stabilizer generators to CSS form")
    p.add_argument("code")
    p.add_argument("--out")

    p = sub.add_parser("minimal-n", help="least n admitting a one-qudit single-error code")
    p.add_argument("--d", type=int, required=True)
    return parser


def run(args: argparse.Namespace) -> int:
    cmd = args.command
    if cmd == "avoid-graph":
        _emit(export_dot(build_avoidance_graph(_load_errors(args.errors))), args.out)
    elif cmd == "luc-graph":
        spec = parse_code(_read(args.code))
        luc = build_luc_graph(spec)
        highlight = None
        if args.errors:
            E = _load_errors(args.errors)
            check_same_space(spec, E)
            highlight = edge_intersection(build_avoidance_graph(E), luc)
        _emit(export_dot(luc, highlight), args.out)
    elif cmd == "codewords":
        spec = parse_code(_read(args.code))
        _emit(format_amplitudes(build_codewords(spec, cap=args.cap_dim)), args.out)
    elif cmd == "check":
        spec = parse_code(_read(args.code))
        E = _load_errors(args.errors)
        check_same_space(spec, E)
        rules = RULE_ORDER if args.rule == "all" else (args.rule,)
        symbolic = tuple(r for r in rules if r != "numeric")
        verdicts = run_rules(spec, E, symbolic)
        if "numeric" in rules and spec.field.d**spec.n <= args.cap_dim:
            verdicts.append(kl_numeric(build_codewords(spec, cap=args.cap_dim), E, cap=args.cap_dim))
        elif "numeric" in rules:
            print("note: numeric check skipped, state dimension above --cap-dim", file=sys.stderr)
        if not verdicts:
            raise ReflexError("no check could be executed")
        _emit(format_report(verdicts), args.out)
        return 0 if all(v.correctable for v in verdicts) else 1
    elif cmd == "search":
        E = _load_errors(args.errors)
        cfg = SearchConfig(strategy=args.strategy, require=_SEARCH_RULES[args.rule])
        result = heuristic_search(E, cfg)
        _emit(format_code(result.spec, result.trace), args.out)
    elif cmd == "css-map":
        spec = parse_code(_read(args.code))
        _emit(format_pairs(phi_on_stabilizer(ReflexiveStabilizer(spec))), args.out)
    elif cmd == "minimal-n":
        if args.d != 4:
            print("note: packing bound using 2(d-1)n+1 single-qudit errors", file=sys.stderr)
        print(minimal_physical_qudits(args.d))
    return 0


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return run(args)
    except (ReflexError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
