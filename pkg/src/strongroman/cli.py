"""Command-line entry point: ``strongroman <command> ...``.

Exit codes: 0 success, 1 violations found (or invalid labeling), 2 usage or
input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from .constructions import CONSTRUCTIONS, construct_domset_bound, construct_total_domset_bound
from .corpus import AllConnected, AllTrees, Corpus, Random
from .errors import CertificateFailure, StrongRomanError
from .families import closed_forms, parse_spec, realize
from .formats import LabelingDocument, emit_graph6, parse_edge_list, parse_graph6, write_report_csv, write_report_json, report_summary
from .graph import Graph
from .labeling import validate_rd, validate_strd, validate_trd, validate_tstrd
from .solvers import ParamBundle, compute_bundle
from .verify import TheoremId, sweep

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2

VALIDATORS = {"rd": validate_rd, "trd": validate_trd, "strd": validate_strd, "tstrd": validate_tstrd}


class UsageError(Exception):
    pass


def _dump(obj) -> None:
    print(json.dumps(obj, indent=2))


def _add_graph_source(p: argparse.ArgumentParser, required: bool = True) -> None:
    src = p.add_mutually_exclusive_group(required=required)
    src.add_argument("--graph6", help="graph in graph6 format")
    src.add_argument("--edges", metavar="FILE", help="edge-list file: 'n m' then m lines 'u v'")
    src.add_argument("--family", metavar="SPEC", help="family member, e.g. path:6, dstar:2,2, corona:cycle:3")


def _read_graph(args: argparse.Namespace) -> Optional[Graph]:
    if args.graph6 is not None:
        return parse_graph6(args.graph6)
    if args.edges is not None:
        return parse_edge_list(Path(args.edges).read_text())
    if args.family is not None:
        return realize(parse_spec(args.family))
    return None


def _int_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("-")
    try:
        a, b = int(lo), int(hi) if sep else int(lo)
    except ValueError:
        raise UsageError(f"expected N or A-B, got {text!r}") from None
    if a < 1 or b < a:
        raise UsageError(f"bad order range {text!r}")
    return a, b


def _corpus(args: argparse.Namespace, default_min: Optional[int] = None) -> Corpus:
    if args.all_connected:
        lo, hi = _int_range(args.all_connected)
        if default_min is not None and "-" not in args.all_connected:
            lo = default_min
        return AllConnected(hi, lo)
    if args.all_trees:
        lo, hi = _int_range(args.all_trees)
        return AllTrees(hi, lo)
    try:
        count, n, p, seed = args.random.split(",")
        return Random(int(count), int(n), float(p), int(seed) if args.seed is None else args.seed)
    except ValueError:
        raise UsageError(f"--random expects COUNT,N,P,SEED, got {args.random!r}") from None


def _add_corpus(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--all-connected", metavar="N|A-B", help="connected graphs of order N, or orders A..B")
    src.add_argument("--all-trees", metavar="N|A-B", help="trees of order N, or orders A..B")
    src.add_argument("--random", metavar="COUNT,N,P,SEED", help="G(n,p) sample")
    p.add_argument("--seed", type=int, help="override the seed of --random")
    p.add_argument("--workers", type=int, help="worker processes (default: STRONGROMAN_WORKERS or CPU count)")


def _theorems(text: Optional[str]) -> list[TheoremId]:
    if not text:
        return list(TheoremId)
    try:
        return [TheoremId(x.strip()) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_solve(args: argparse.Namespace) -> int:
    g = _read_graph(args)
    bundle = compute_bundle(g, args.engine).as_dict()
    if args.param:
        if args.param not in ParamBundle.FIELDS:
            raise UsageError(f"unknown parameter {args.param!r}; choose from {', '.join(ParamBundle.FIELDS)}")
        bundle = {args.param: bundle[args.param]}
    _dump(bundle)
    return EXIT_OK


def cmd_validate(args: argparse.Namespace) -> int:
    if args.labeling:
        doc = LabelingDocument.from_json(Path(args.labeling).read_text())
    elif args.labels is not None:
        labels = tuple(int(x) for x in args.labels.split(",") if x.strip())
        doc = LabelingDocument(len(labels), labels)
    else:
        raise UsageError("give --labeling FILE or --labels LIST")
    g = _read_graph(args)
    if g is None and doc.graph6:
        g = parse_graph6(doc.graph6)
    elif g is None and doc.edges_path:
        g = parse_edge_list(Path(doc.edges_path).read_text())
    if g is None:
        raise UsageError("no graph given (use --graph6/--edges/--family or a graph reference in the document)")
    verdict = VALIDATORS[args.kind](g, doc.labels)
    _dump(verdict.as_dict())
    return EXIT_OK if verdict.valid else EXIT_VIOLATION


def cmd_family(args: argparse.Namespace) -> int:
    spec = parse_spec(args.spec)
    g = realize(spec)
    _dump({"family": str(spec), "graph6": emit_graph6(g), "order": g.order, "closed_forms": closed_forms(spec)})
    return EXIT_OK


def cmd_construct(args: argparse.Namespace) -> int:
    g = _read_graph(args)
    build = CONSTRUCTIONS[args.name]
    if args.set is not None:
        if build not in (construct_domset_bound, construct_total_domset_bound):
            raise UsageError("--set only applies to domset and tdomset")
        chosen = [int(x) for x in args.set.split(",") if x.strip()]
        cert = build(g, chosen)
    else:
        cert = build(g)
    _dump(cert.as_dict())
    return EXIT_OK


def _emit_report(report, out: Optional[str]) -> None:
    if out:
        base = Path(out)
        base.parent.mkdir(parents=True, exist_ok=True)
        with open(base.with_suffix(".csv"), "w", newline="") as fp:
            write_report_csv(report, fp)
        with open(base.with_suffix(".json"), "w") as fp:
            write_report_json(report, fp)
    summary = report_summary(report)
    if out:
        summary = {k: v for k, v in summary.items() if k != "violations"} | {"violations": len(report.violations)}
    _dump(summary)


def cmd_sweep(args: argparse.Namespace) -> int:
    report = sweep(_corpus(args), _theorems(args.theorems), args.workers)
    _emit_report(report, args.out)
    return EXIT_OK if report.ok else EXIT_VIOLATION


def cmd_nordhaus(args: argparse.Namespace) -> int:
    report = sweep(_corpus(args, default_min=4), [TheoremId.PROP_NG], args.workers)
    _emit_report(report, args.out)
    return EXIT_OK if report.ok else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="strongroman", description="Total strong Roman domination toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="compute the parameter bundle of a graph")
    _add_graph_source(p)
    p.add_argument("--param", help="print only this parameter")
    p.add_argument("--engine", choices=("oracle", "bb"), default="bb")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("validate", help="validate a labeling")
    _add_graph_source(p, required=False)
    p.add_argument("--labeling", metavar="FILE", help="labeling document (JSON)")
    p.add_argument("--labels", help="comma-separated labels, vertex 0 first")
    p.add_argument("--kind", choices=tuple(VALIDATORS), default="tstrd")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("family", help="print a family member and its closed forms")
    p.add_argument("spec")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("construct", help="run a certified construction")
    p.add_argument("name", choices=tuple(CONSTRUCTIONS))
    _add_graph_source(p)
    p.add_argument("--set", help="vertex set for domset/tdomset, comma-separated")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("sweep", help="check theorems over a corpus")
    _add_corpus(p)
    p.add_argument("--theorems", help="comma-separated theorem ids (default: all)")
    p.add_argument("--out", metavar="PREFIX", help="write PREFIX.csv and PREFIX.json")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("nordhaus", help="check the Nordhaus-Gaddum bound (orders 4..N by default)")
    _add_corpus(p)
    p.add_argument("--out", metavar="PREFIX")
    p.set_defaults(func=cmd_nordhaus)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except CertificateFailure as exc:
        print(f"certificate failure: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except (UsageError, StrongRomanError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
