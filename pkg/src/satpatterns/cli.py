"""Command-line entry point.

Exit codes
----------
check         0 SAT, 20 UNSAT, 2 error
patterns      0 pattern found, 1 none, 2 error
verify-paper  0 reproduced, 3 deviation
others        0 success, 2 error (including usage errors)

Data goes to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from pathlib import Path
from typing import Optional, Sequence

from .errors import SatPatternsError
from .frontend.dimacs import emit_dimacs, read_dimacs
from .frontend.formula import format_formula, read_formula
from .frontend.report import write_report
from .logic import paper_counterexample
from .miner import Quadrant, classify, enumerate_instances, random_instance
from .oracle import brute_force_sat, count_models, dpll_sat
from .patterns import detect_any

EXIT_SAT = 0
EXIT_UNSAT = 20
EXIT_ERROR = 2
EXIT_DEVIATION = 3

PAPER_FORMULA = "~a & ~b & ~c & (a | b) & (a | c) & (b | c)"

log = logging.getLogger("satpatterns")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _load(path: str, formula: bool):
    """Return ``(instance, names)``; ``names`` is None for DIMACS input."""
    text = _read_text(path)
    if formula:
        result = read_formula(text)
        return result.instance, result.names
    return read_dimacs(text).instance, None


def cmd_check(args) -> int:
    instance, names = _load(args.file, args.formula)
    verdict = dpll_sat(instance)
    if args.brute_force:
        reference = brute_force_sat(instance)
        if reference.satisfiable != verdict.satisfiable:
            print(f"error: DPLL and brute force disagree on {args.file}", file=sys.stderr)
            return EXIT_ERROR
    if not verdict.satisfiable:
        print("s UNSATISFIABLE")
        return EXIT_UNSAT
    print("s SATISFIABLE")
    values = [v if verdict.model[v] else -v for v in sorted(verdict.model)]
    print("v " + " ".join(map(str, values + [0])))
    if names:
        print("c " + " ".join(f"{names[v - 1]}={int(verdict.model[v])}" for v in sorted(verdict.model)))
    return EXIT_SAT


def cmd_patterns(args) -> int:
    instance, names = _load(args.file, args.formula)
    report = detect_any(instance)
    if args.json:
        payload = {
            "matched": report.matched,
            "witnesses": [
                {"kind": w.kind.label, "variables": list(w.variables)}
                | ({"names": [names[v - 1] for v in w.variables]} if names else {})
                for w in report.witnesses
            ],
        }
        print(json.dumps(payload))
    elif not report.matched:
        print("no pattern")
    else:
        for w in report.witnesses:
            shown = [names[v - 1] for v in w.variables] if names else [f"x{v}" for v in w.variables]
            print(f"{w.kind.label}: {', '.join(shown)}")
    return 0 if report.matched else 1


def cmd_classify(args) -> int:
    status = 0
    for path in args.files:
        try:
            instance, names = _load(path, args.formula)
        except (OSError, SatPatternsError) as exc:
            print(f"error: {path}: {exc}", file=sys.stderr)
            status = EXIT_ERROR
            continue
        write_report([classify(instance, source=path, names=names)], sys.stdout)
    return status


def cmd_mine(args) -> int:
    wanted = Quadrant.from_cli(args.quadrant) if args.quadrant else None
    records = (classify(i) for i in enumerate_instances(args.max_vars, args.max_clauses))
    if wanted is not None:
        records = (r for r in records if r.quadrant is wanted)
    count = write_report(records, sys.stdout, extra=lambda r: {"dimacs": emit_dimacs(r.instance)})
    log.info("emitted %d record(s)", count)
    return 0


def cmd_verify_paper(args) -> int:
    started = time.perf_counter()
    parsed = read_formula(PAPER_FORMULA)
    instance = paper_counterexample()
    checks = {
        "formula parses to the expected clause set": parsed.instance == instance,
        "brute force: UNSAT": not brute_force_sat(instance).satisfiable,
        "DPLL: UNSAT": not dpll_sat(instance).satisfiable,
        "model count is 0": count_models(instance) == 0,
        "no pattern 1/2/3 present": not detect_any(instance).matched,
    }
    elapsed = time.perf_counter() - started
    print(f"formula: {format_formula(parsed.instance, parsed.names)}")
    for label, ok in checks.items():
        print(f"  [{'ok' if ok else 'FAIL'}] {label}")
    if all(checks.values()):
        print(f"reproduced: unsatisfiable yet pattern-free ({elapsed:.3f}s)")
        return 0
    print("DEVIATION: counterexample not reproduced", file=sys.stderr)
    return EXIT_DEVIATION


def cmd_gen(args) -> int:
    sys.stdout.write(emit_dimacs(random_instance(args.vars, args.clauses, args.seed)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="satpatterns", description=__doc__.split("\n")[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def input_args(p, many=False):
        if many:
            p.add_argument("files", nargs="+", help="input files ('-' for stdin)")
        else:
            p.add_argument("file", help="input file ('-' for stdin)")
        p.add_argument("--formula", action="store_true", help="input is infix formula syntax, not DIMACS")

    p = sub.add_parser("check", help="decide satisfiability (exit 0 SAT, 20 UNSAT)")
    input_args(p)
    p.add_argument("--brute-force", action="store_true", help="cross-check DPLL against exhaustive search")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("patterns", help="detect patterns 1-3 (exit 0 matched, 1 not)")
    input_args(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_patterns)

    p = sub.add_parser("classify", help="JSON-lines classification record per input")
    input_args(p, many=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("mine", help="enumerate small instances up to symmetry")
    p.add_argument("--max-vars", type=int, required=True)
    p.add_argument("--max-clauses", type=int, required=True)
    p.add_argument("--quadrant", choices=[q.cli_name for q in Quadrant])
    p.set_defaults(func=cmd_mine)

    p = sub.add_parser("verify-paper", help="reproduce the pattern-free UNSAT counterexample")
    p.set_defaults(func=cmd_verify_paper)

    p = sub.add_parser("gen", help="random instance as DIMACS")
    p.add_argument("--vars", type=int, required=True)
    p.add_argument("--clauses", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse usage errors and --help
        return exc.code if isinstance(exc.code, int) else EXIT_ERROR
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except (OSError, SatPatternsError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
