"""Command-line driver.

Subcommands build the finite objects attached to a weight vector or run the
verification checks.  The payload goes to stdout (or to --out); diagnostics
go to stderr.  Exit codes: 0 success, 1 some check assertion failed,
2 usage or validation error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .checks import (check_exceptional_matrix, check_gorenstein_reciprocity,
                     check_isomorphism, k_theory_report)
from .grading import WeightError, hilbert_table, validate_weights
from .mckay import mckay_quiver, verify_mckay_consistency
from .path_algebra import (PathAlgebraError, cartan_matrix,
                           cartan_matrix_oracle, check_confluence, hom_basis)
from .quiver import (QuiverWithRelations, ValidationError, build_gamma,
                     export_dot, serialize_dsl, to_json)

SUITES = ("mckay", "iso", "exceptional", "gorenstein", "ktheory", "confluence")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cycquiver",
        description="quivers, gradings, and checks for a weight vector")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("weights", nargs="+", type=int, metavar="a",
                       help="weight vector entries")
        p.add_argument("--out", metavar="PATH",
                       help="write the payload to PATH instead of stdout")
        return p

    p = add("mckay", "McKay quiver of the cyclic action")
    p.add_argument("--format", choices=("json", "dot"), default="json")

    p = add("gamma", "commutation quiver with relations")
    p.add_argument("--format", choices=("json", "dot", "dsl"), default="json")

    p = add("cartan", "Cartan matrix of the commutation quiver")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--oracle", action="store_true",
                   help="recompute by exact linear algebra on raw path spaces")
    p.add_argument("--path-cap", type=int, default=200_000,
                   help="oracle refuses above this many raw paths per pair")

    p = add("hilbert", "dimension table of the graded ring")
    p.add_argument("--ring", choices=("R", "A"), default="R")
    p.add_argument("--max", type=int, required=True, dest="max_index",
                   help="top index of the table window")
    p.add_argument("--format", choices=("json", "text"), default="json")

    p = add("basis", "sorted path basis of one between-vertex space")
    p.add_argument("--from", type=int, required=True, dest="source",
                   metavar="K", help="source vertex index (1-based)")
    p.add_argument("--to", type=int, required=True, dest="target",
                   metavar="L", help="target vertex index (1-based)")
    p.add_argument("--format", choices=("json", "text"), default="json")

    p = add("check", "run verification suites")
    p.add_argument("--suite", choices=("all",) + SUITES, default="all")
    p.add_argument("--kmax", type=int, default=20,
                   help="reciprocity levels to verify")
    p.add_argument("--trials", type=int, default=500,
                   help="randomized confluence trials")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("json", "text"), default="json")

    return parser


def _emit(payload: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)


def _cmd_mckay(args) -> tuple[str, int]:
    w = validate_weights(args.weights)
    quiver = mckay_quiver(w)
    if args.format == "dot":
        return export_dot(quiver), 0
    return to_json(QuiverWithRelations(quiver, (), w.weights)), 0


def _cmd_gamma(args) -> tuple[str, int]:
    w = validate_weights(args.weights)
    qwr = build_gamma(w)
    if args.format == "dot":
        return export_dot(qwr.quiver), 0
    if args.format == "dsl":
        return serialize_dsl(qwr), 0
    return to_json(qwr), 0


def _cmd_cartan(args) -> tuple[str, int]:
    w = validate_weights(args.weights)
    qwr = build_gamma(w)
    if args.oracle:
        cartan = cartan_matrix_oracle(qwr, path_cap=args.path_cap)
    else:
        cartan = cartan_matrix(qwr)
    if args.format == "text":
        lines = [" ".join(str(v) for v in row) for row in cartan.matrix]
        return "\n".join(lines) + "\n", 0
    return cartan.to_json(), 0


def _cmd_hilbert(args) -> tuple[str, int]:
    w = validate_weights(args.weights)
    table = hilbert_table(w, args.ring, args.max_index)
    if args.format == "text":
        lines = [f"{d} {table.dims[d]}" for d in sorted(table.dims)]
        return "\n".join(lines) + "\n", 0
    return table.to_json(), 0


def _cmd_basis(args) -> tuple[str, int]:
    w = validate_weights(args.weights)
    qwr = build_gamma(w)
    N = w.total
    for v in (args.source, args.target):
        if not 1 <= v <= N - 1:
            raise ValidationError(f"vertex index {v} outside 1..{N - 1}")
    paths = hom_basis(qwr, args.source - 1, args.target - 1)
    names = [[qwr.quiver.arrows[i].name for i in p.arrows] for p in paths]
    if args.format == "text":
        lines = [" ".join(row) if row else "(identity)" for row in names]
        return "\n".join(lines) + ("\n" if lines else ""), 0
    payload = {"weights": list(w.weights), "from": args.source,
               "to": args.target, "paths": names}
    return json.dumps(payload, indent=2) + "\n", 0


def _cmd_check(args) -> tuple[str, int]:
    w = validate_weights(args.weights)
    suites = SUITES if args.suite == "all" else (args.suite,)
    reports = []
    for suite in suites:
        if suite == "mckay":
            reports.append(verify_mckay_consistency(w))
        elif suite == "iso":
            reports.append(check_isomorphism(w, seed=args.seed).to_check_report())
        elif suite == "exceptional":
            reports.append(check_exceptional_matrix(w))
        elif suite == "gorenstein":
            reports.append(check_gorenstein_reciprocity(w, args.kmax))
        elif suite == "ktheory":
            reports.append(k_theory_report(w))
        elif suite == "confluence":
            reports.append(check_confluence(build_gamma(w), args.trials,
                                            args.seed))
    verdict = "pass" if all(r.passed for r in reports) else "fail"
    code = 0 if verdict == "pass" else 1
    if args.format == "text":
        lines = [f"weights: {' '.join(str(a) for a in w.weights)}",
                 f"seed: {args.seed}"]
        for r in reports:
            lines.append(f"{r.check}: {r.verdict}")
            for a in r.failures():
                lines.append(f"  FAIL {a.id}: {a.detail}")
        lines.append(f"verdict: {verdict}")
        return "\n".join(lines) + "\n", code
    payload = {
        "weights": list(w.weights),
        "seed": args.seed,
        "kmax": args.kmax,
        "trials": args.trials,
        "reports": [r.to_dict() for r in reports],
        "verdict": verdict,
    }
    return json.dumps(payload, indent=2) + "\n", code


_COMMANDS = {
    "mckay": _cmd_mckay,
    "gamma": _cmd_gamma,
    "cartan": _cmd_cartan,
    "hilbert": _cmd_hilbert,
    "basis": _cmd_basis,
    "check": _cmd_check,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        payload, code = _COMMANDS[args.command](args)
    except (WeightError, ValidationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PathAlgebraError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(payload, args.out)
    return code


def entry_point() -> None:
    raise SystemExit(main(sys.argv[1:]))
