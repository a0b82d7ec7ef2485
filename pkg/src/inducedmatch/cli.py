"""Command-line front end: ``inducedmatch solve|gen|verify|batch|gap|params``."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .extremal import (InstanceSpec, blowup_optimal_primal, conjecture_gap_bound, gen_blownup_c5,
                       load_manifest, measure_gap)
from .good_dual import PreconditionError
from .graph import GraphError, parse_graph, serialize_graph
from .local_ratio import GreedyBoundViolated, RatioParams, default_params, q_feasible, q_slacks
from .lp import fractional_nu_s, lp_text
from .oracle import OracleCapExceeded
from .reports import ALGORITHMS, add_float_view, build_report, dump_report, rows_to_csv, run_batch, run_timed
from .subcubic import HeadInfeasible, SubcubicPreconditionError
from .verify import MalformedReport, format_rational, verify_report

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_PRECONDITION, EXIT_INTERNAL = 0, 1, 2, 3, 4

FAMILY_ALIASES = {
    "t-star": "t_star", "tstar": "t_star", "blowup-c5": "blownup_c5", "blownup-c5": "blownup_c5",
    "random": "random_bounded", "random-bounded": "random_bounded",
}


class InputError(Exception):
    pass


def _read_text(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_solve(args) -> int:
    try:
        g = parse_graph(_read_text(args.graph))
    except GraphError as exc:
        raise InputError(str(exc)) from exc
    if args.dump_lp:
        _emit(lp_text(g, args.dump_lp), args.out)
        return EXIT_OK
    kw = {"delta": args.delta, "instance": args.graph}
    report = run_timed(g, args.algo, **kw) if args.timing else build_report(g, args.algo, **kw)
    if args.float:
        add_float_view(report)
    _emit(dump_report(report), args.out)
    return EXIT_OK


def cmd_gen(args) -> int:
    family = FAMILY_ALIASES.get(args.family, args.family)
    try:
        spec = InstanceSpec(family, args.delta, args.n, args.seed)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    _emit(serialize_graph(spec.build()), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        report = json.loads(_read_text(args.report))
    except json.JSONDecodeError as exc:
        raise InputError(f"report is not JSON: {exc}") from exc
    if not isinstance(report, dict):
        raise InputError("report must be a JSON object")
    try:
        errors = verify_report(report)
    except MalformedReport as exc:
        raise InputError(f"malformed report: {exc}") from exc
    for e in errors:
        print(f"FAIL {e}")
    if errors:
        return EXIT_VERIFY
    print("PASS")
    return EXIT_OK


def cmd_batch(args) -> int:
    try:
        specs = load_manifest(_read_text(args.manifest))
    except (json.JSONDecodeError, ValueError) as exc:
        raise InputError(f"bad manifest: {exc}") from exc
    rows = run_batch(specs, args.jobs)
    _emit(rows_to_csv(rows), args.out)
    bad = [r for r in rows if r["gap_ok"] is False]
    for r in bad:
        print(f"counterexample candidate: {r['instance']} gap {r['gap']} > {r['gap_bound']}", file=sys.stderr)
    return EXIT_OK


def cmd_gap(args) -> int:
    d = args.delta
    out = {"delta": d, "bound": format_rational(conjecture_gap_bound(d))}
    g = gen_blownup_c5(d)
    out["blowup_lp"] = format_rational(fractional_nu_s(g))
    try:
        out["closed_form"] = format_rational(blowup_optimal_primal(d).total())
    except ValueError as exc:
        out["closed_form"] = f"n/a ({exc})"
    if args.measure:
        out["measured_gap"] = format_rational(measure_gap(g))
    _emit(json.dumps(out, indent=2) + "\n", None)
    return EXIT_OK


def cmd_params(args) -> int:
    if args.epsilon is None and args.c is None:
        p = default_params(args.delta)
        eps, c = p.epsilon, p.c
    else:
        try:
            eps = Fraction(args.epsilon) if args.epsilon else default_params(3).epsilon
            c = Fraction(args.c) if args.c else default_params(3).c
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"bad rational: {exc}") from exc
    feasible = q_feasible(eps, c)
    out = {"delta": args.delta, "epsilon": format_rational(eps), "c": format_rational(c),
           "q_feasible": feasible}
    if eps + c < 1 and c < 1:
        out["g"] = format_rational(eps / (1 - c))
        s1, s2 = q_slacks(eps, c)
        out["slack_quadratic"], out["slack_eps"] = format_rational(s1), format_rational(s2)
    out["f"] = format_rational((1 - eps) * args.delta + Fraction(1, 2))
    if feasible:
        RatioParams(eps, c, args.delta)
    _emit(json.dumps(out, indent=2) + "\n", None)
    return EXIT_OK if feasible else EXIT_PRECONDITION


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="inducedmatch", description="Induced matchings: LP bounds and approximations.")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="run one algorithm on a graph file")
    s.add_argument("graph", help="edge-list file, or - for stdin")
    s.add_argument("--algo", choices=ALGORITHMS, default="auto")
    s.add_argument("--delta", type=int, help="degree bound for the local-ratio pipeline")
    s.add_argument("--out", help="write the report here instead of stdout")
    s.add_argument("--float", action="store_true", help="add approximate decimal values")
    s.add_argument("--timing", action="store_true", help="record wall time (report no longer reproducible)")
    s.add_argument("--dump-lp", choices=("primal", "dual"), help="print the LP in CPLEX-LP format and exit")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("gen", help="write a generated graph")
    s.add_argument("family", help="t-star, blowup-c5, random, path, cycle, complete, star")
    s.add_argument("--delta", type=int, default=0)
    s.add_argument("--n", type=int, default=0)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--out")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("verify", help="re-check a report produced by solve")
    s.add_argument("report")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("batch", help="run a JSON manifest of instances, write CSV")
    s.add_argument("manifest")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--out")
    s.set_defaults(func=cmd_batch)

    s = sub.add_parser("gap", help="integrality-gap figures for the blown-up C5")
    s.add_argument("--delta", type=int, required=True)
    s.add_argument("--measure", action="store_true", help="also compute the exact gap")
    s.set_defaults(func=cmd_gap)

    s = sub.add_parser("params", help="local-ratio parameters for a degree bound")
    s.add_argument("--delta", type=int, default=3)
    s.add_argument("--epsilon")
    s.add_argument("--c")
    s.set_defaults(func=cmd_params)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (SubcubicPreconditionError, PreconditionError, OracleCapExceeded) as exc:
        print(f"precondition: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (AssertionError, HeadInfeasible, GreedyBoundViolated, ArithmeticError) as exc:
        print(f"internal: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (ValueError, GraphError) as exc:
        print(f"precondition: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
