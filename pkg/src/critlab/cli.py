"""crit-lab command line: chroma, check, replay, certify, verify.

Exit codes: 0 = success / expected outcome, 1 = counterexample or property
violation (a witness accompanies it on stdout), 2 = input or usage error.
Data goes to stdout as JSON (one document per input graph); progress and
errors go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .coloring import chromatic_number, is_k_colorable
from .criticality import (
    CheckOutcome,
    criticality_report,
    is_double_critical,
    is_edge_plus_vertex_critical,
    is_indep_edge_pair_critical,
    is_triangle_critical,
    is_vertex_critical,
)
from .enumeration import (
    ingest_graph6,
    verify_double_critical,
    verify_triangle_conjecture,
)
from .formats import parse_edge_list, parse_graph6, to_graph6
from .graphs import Graph
from .replay import CertificateSchemaError, Verdict, replay_proof, verify_certificate

_PREDICATES = {
    "vertex": is_vertex_critical,
    "double": is_double_critical,
    "triangle": is_triangle_critical,
    "indep-edges": is_indep_edge_pair_critical,
    "edge-vertex": is_edge_plus_vertex_critical,
}


def _add_graph_input(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--g6", metavar="STR", help="graph6 string")
    group.add_argument("--file", metavar="PATH",
                       help="graph6 file, one graph per line ('-' for stdin)")
    group.add_argument("--edges", metavar="LIST",
                       help="edge list like '0 1,1 2,2 0' (0-based)")


def _read_lines(path: str) -> list[str]:
    if path == "-":
        return sys.stdin.read().splitlines()
    return Path(path).read_text().splitlines()


def _input_graphs(args: argparse.Namespace) -> list[Graph]:
    if args.g6 is not None:
        return [parse_graph6(args.g6)]
    if args.edges is not None:
        return [parse_edge_list(args.edges.replace(",", "\n"))]
    return [g for _, g in ingest_graph6(_read_lines(args.file))]


def _emit(doc: dict, pretty: bool) -> None:
    print(json.dumps(doc, indent=2 if pretty else None, sort_keys=True))


def _cmd_chroma(args: argparse.Namespace) -> int:
    for g in _input_graphs(args):
        chi = chromatic_number(g)
        coloring = is_k_colorable(g, chi)
        _emit({
            "graph6": to_graph6(g),
            "n": g.n,
            "chi": chi,
            "coloring": coloring.to_json() if coloring else [],
        }, args.pretty)
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    status = 0
    for g in _input_graphs(args):
        report = criticality_report(g)
        outcome: CheckOutcome = _PREDICATES[args.predicate](g)
        doc = report.to_json()
        doc["predicate"] = {
            "name": args.predicate,
            "holds": outcome.holds,
            "applicable": outcome.applicable,
            "witness": outcome.witness.to_json() if outcome.witness else None,
        }
        _emit(doc, args.pretty)
        if outcome.holds is False:
            status = 1
    return status


def _cmd_replay(args: argparse.Namespace) -> int:
    status = 0
    for g in _input_graphs(args):
        diagnosis = replay_proof(g)
        _emit(diagnosis.to_doc(), args.pretty)
        if diagnosis.verdict is Verdict.CHAIN_ANOMALY:
            status = 1
    return status


def _cmd_certify(args: argparse.Namespace) -> int:
    try:
        doc = json.loads(Path(args.check).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: cannot read certificate: {exc}", file=sys.stderr)
        return 2
    failures = verify_certificate(doc)  # CertificateSchemaError handled by main
    _emit({"file": args.check, "valid": not failures, "failures": failures},
          args.pretty)
    return 0 if not failures else 1


def _cmd_verify(args: argparse.Namespace) -> int:
    source = None
    if args.g6_in:
        source = [g for _, g in ingest_graph6(_read_lines(args.g6_in))]
    runner = verify_triangle_conjecture if args.conjecture == "triangle" else verify_double_critical
    print(f"scanning connected graphs up to n={args.n_max} "
          f"(k={args.k}, {args.conjecture})", file=sys.stderr)
    report = runner(args.k, args.n_max, source=source, jobs=args.jobs,
                    prefilters=not args.no_prefilters)
    _emit(report.to_doc(), args.pretty)
    if args.hits_out:
        Path(args.hits_out).write_text("".join(h + "\n" for h in report.hits))
    return 0 if report.hits_as_expected() else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crit-lab",
        description="Exact chromatic-criticality toolkit for small graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chroma", help="chromatic number and an optimal coloring")
    _add_graph_input(p)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(fn=_cmd_chroma)

    p = sub.add_parser("check", help="criticality predicates with witnesses")
    _add_graph_input(p)
    p.add_argument("--predicate", choices=sorted(_PREDICATES), default="triangle")
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("replay", help="replay the chain argument, emit a certificate")
    _add_graph_input(p)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(fn=_cmd_replay)

    p = sub.add_parser("certify", help="re-validate a stored certificate")
    p.add_argument("--check", metavar="FILE", required=True)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(fn=_cmd_certify)

    p = sub.add_parser("verify", help="exhaustive conjecture scan")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--conjecture", choices=["triangle", "double"], default="triangle")
    p.add_argument("--jobs", type=int, default=None,
                   help="worker processes (default: CRIT_LAB_JOBS or all cores)")
    p.add_argument("--g6-in", metavar="FILE", default=None,
                   help="scan graphs from a graph6 file or '-' (stdin) "
                        "instead of generating")
    p.add_argument("--no-prefilters", action="store_true")
    p.add_argument("--hits-out", metavar="FILE", default=None,
                   help="also write hits as a graph6 file")
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(fn=_cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except CertificateSchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
