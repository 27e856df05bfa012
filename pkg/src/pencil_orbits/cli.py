"""Command-line entry point: ``pencil-orbits <command> ...``.

Exit codes: 0 success, 1 a requested check failed, 2 malformed input,
3 internal consistency error in the classifier.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .classifier import ClassificationError, PencilError, base_locus_descriptor, classify, pencil_from_json
from .exact_forms import FieldError
from .flag_chern import chern_top_principal_parts, chern_top_sym3_dual, format_flag
from .harness import CHECKS, run_check, verify_table
from .schubert import SchubertError, format_class, parse_class, schubert_degree

SEED_ENV = "PENCIL_ORBITS_SEED"

EXIT_OK, EXIT_CHECK_FAILED, EXIT_BAD_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


def _dump(obj, pretty: bool) -> str:
    return json.dumps(obj, indent=2 if pretty else None, ensure_ascii=False)


def cmd_classify(args) -> int:
    try:
        if args.pencil == "-":
            data = json.load(sys.stdin)
        else:
            with open(args.pencil, encoding="utf-8") as fh:
                data = json.load(fh)
        pencil = pencil_from_json(data)
    except (OSError, json.JSONDecodeError, PencilError, FieldError, ValueError) as exc:
        print(f"error: malformed pencil: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    try:
        label, cert = classify(pencil)
    except ClassificationError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    out = {
        "orbit": label.name,
        "name": label.label,
        "base_locus": base_locus_descriptor(label),
        "certificate": cert.to_json(),
    }
    print(_dump(out, args.pretty))
    return EXIT_OK


def cmd_table(args) -> int:
    report = verify_table()
    if args.json:
        print(_dump(report.to_json(), pretty=True))
    else:
        print(report.text())
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def cmd_schubert(args) -> int:
    try:
        x = parse_class(args.expr, args.N)
    except SchubertError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    print(format_class(x, with_context=args.context))
    return EXIT_OK


def cmd_degree(args) -> int:
    try:
        parts = [int(v) for v in args.partition.split(",")]
        if len(parts) == 1:
            parts.append(0)
        if len(parts) != 2:
            raise ValueError("expected 'a' or 'a,b'")
        print(schubert_degree(parts[0], parts[1], args.N))
    except (ValueError, SchubertError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    return EXIT_OK


def cmd_chern(args) -> int:
    if args.sym3:
        print(format_class(chern_top_sym3_dual(), with_context=False))
        return EXIT_OK
    try:
        print(format_flag(chern_top_principal_parts(args.principal_parts), with_context=False))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    return EXIT_OK


def cmd_verify(args) -> int:
    checks = sorted(CHECKS) if args.check == "all" else [args.check]
    reports = [run_check(c, args.trials, args.seed, args.workers) for c in checks]
    for r in reports:
        print(f"{r.summary()}  {'PASS' if r.passed() else 'FAIL'}", file=sys.stderr)
    payload = [r.to_json() for r in reports]
    print(_dump(payload[0] if len(payload) == 1 else payload, args.pretty))
    return EXIT_OK if all(r.passed() for r in reports) else EXIT_CHECK_FAILED


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    try:
        return int(raw) if raw is not None else 0
    except ValueError:
        return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pencil-orbits",
                                     description="Orbits of pencils of plane conics and their classes in A G(1,5).")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify a pencil given as JSON")
    p.add_argument("--pencil", required=True, help="JSON file ('-' for stdin)")
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("table", help="reproduce the table of orbit-closure classes")
    p.add_argument("--json", action="store_true", help="emit the JSON report")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("schubert", help="expand an expression in the Schubert basis")
    p.add_argument("expr")
    p.add_argument("--N", type=int, default=None)
    p.add_argument("--context", action="store_true", help="append '@ N=...'")
    p.set_defaults(func=cmd_schubert)

    p = sub.add_parser("degree", help="Plücker degree of a Schubert cycle")
    p.add_argument("partition", help="'a,b'")
    p.add_argument("--N", type=int, default=5)
    p.set_defaults(func=cmd_degree)

    p = sub.add_parser("chern", help="Chern classes on the flag bundle")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--principal-parts", type=int, metavar="R")
    g.add_argument("--sym3", action="store_true")
    p.set_defaults(func=cmd_chern)

    p = sub.add_parser("verify", help="randomized exact verifications")
    p.add_argument("--check", choices=sorted(CHECKS) + ["all"], default="all")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=_default_seed())
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
