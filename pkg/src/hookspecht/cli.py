"""hook-specht: Hom spaces from Specht modules into hook Specht modules.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from .arith import Field
from .combinatorics import Partition, QuiverParams
from .hook import HookShape
from .presentation import garnir_datum, garnir_nodes
from .relations import run_suite
from .solver import bruteforce_hom, classify_hom
from .sweep import ROW_FIELDS, sweep

HARD_DMAX = 12


class UsageError(Exception):
    pass


def dmax_cap() -> int:
    raw = os.environ.get("HOOK_SPECHT_DMAX")
    if raw is None:
        return HARD_DMAX
    try:
        return max(1, min(HARD_DMAX, int(raw)))
    except ValueError:
        raise UsageError(f"HOOK_SPECHT_DMAX must be an integer, got {raw!r}") from None


def _int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj) + "\n")


def _instance(args):
    try:
        q = QuiverParams(args.e)
        field = Field(args.char)
        mu = Partition.parse(args.mu)
        shape = HookShape(args.d, args.k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if mu.d != shape.d:
        raise UsageError(f"partition {args.mu} has size {mu.d}, not d={shape.d}")
    return mu, shape, field, q


def _show_garnir(mu, q):
    for A in garnir_nodes(mu):
        print(garnir_datum(mu, A, q).render(), file=sys.stderr)


def cmd_classify(args) -> int:
    mu, shape, field, q = _instance(args)
    if args.show_garnir:
        _show_garnir(mu, q)
    _emit(classify_hom(mu, shape, field, q).to_json())
    return 0


def cmd_solve(args) -> int:
    mu, shape, field, q = _instance(args)
    if shape.d > dmax_cap():
        raise UsageError(f"d={shape.d} exceeds the brute-force cap {dmax_cap()}")
    if args.show_garnir:
        _show_garnir(mu, q)
    cert = bruteforce_hom(mu, shape, field, q)
    status = 0
    if args.check:
        other = classify_hom(mu, shape, field, q)
        cert.agreement = (
            cert.dimension == other.dimension
            and cert.image == other.image
            and cert.graded_degree == other.graded_degree
        )
        cert.witness = other.witness
        status = 0 if cert.agreement else 1
    _emit(cert.to_json())
    return status


def cmd_sweep(args) -> int:
    if args.dmax > dmax_cap():
        raise UsageError(f"--dmax {args.dmax} exceeds the cap {dmax_cap()}")
    try:
        report = sweep(args.dmax, args.e_list, args.char_list, args.jobs)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "csv":
        writer = csv.DictWriter(sys.stdout, fieldnames=ROW_FIELDS, lineterminator="\n")
        writer.writeheader()
        for row in report.rows:
            writer.writerow({**row, "mu": ",".join(map(str, row["mu"]))})
        print(json.dumps({"summary": report.summary}), file=sys.stderr)
    else:
        for row in report.rows:
            _emit(row)
        _emit({"schema": "hook-specht/1", "parameters": report.parameters(), "summary": report.summary})
    return 0 if report.summary["disagreements"] == 0 else 1


def cmd_verify_relations(args) -> int:
    if args.dmax > dmax_cap():
        raise UsageError(f"--dmax {args.dmax} exceeds the cap {dmax_cap()}")
    try:
        results = run_suite(args.dmax, args.e_list, args.char_list)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    failed = 0
    for family, counts in results.items():
        failed += counts["failed"]
        _emit({"family": family, "passed": counts["passed"], "failed": counts["failed"]})
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hook-specht", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    for name, fn, helptext in (
        ("classify", cmd_classify, "closed-form classification"),
        ("solve", cmd_solve, "brute-force kernel of the relation constraints"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--mu", required=True, help="source partition, e.g. 6,3")
        p.add_argument("--d", type=int, required=True)
        p.add_argument("--k", type=int, required=True, help="target is (d-k, 1^k)")
        p.add_argument("--e", type=int, default=3)
        p.add_argument("--char", type=int, default=0, help="0 or a prime")
        p.add_argument("--show-garnir", action="store_true", help="draw Garnir belts on stderr")
        if name == "solve":
            p.add_argument("--check", action="store_true", help="also classify and report agreement")
        p.set_defaults(func=fn)

    p = sub.add_parser("sweep", help="oracle-equivalence sweep")
    p.add_argument("--dmax", type=int, default=6)
    p.add_argument("--e-list", type=_int_list, default=[3])
    p.add_argument("--char-list", type=_int_list, default=[0])
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify-relations", help="run the KLR relation suite on the hook basis")
    p.add_argument("--dmax", type=int, default=5)
    p.add_argument("--e-list", type=_int_list, default=[3])
    p.add_argument("--char-list", type=_int_list, default=[0, 3, 5])
    p.set_defaults(func=cmd_verify_relations)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"hook-specht: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
