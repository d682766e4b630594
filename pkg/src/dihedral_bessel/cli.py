"""Command-line front end.

Subcommands::

    eval        evaluate one method on a point or a grid
    table       evaluate every applicable method on a point or a grid
    intertwine  apply the intertwining operator to |y|^(2 kappa) Y_4m
    verify      run the identity suites and print a JSON report

Coordinates accept a number or ``start:stop:count``; grids are the
Cartesian product in the order rho, phi, r, theta.  Angles outside the
fundamental chamber are folded into it (the function is group invariant);
records keep the angles as given.

Exit codes: 0 success, 1 usage or domain error, 2 non-convergence,
3 verification failure.  ``DUNKL_THREADS`` caps the worker threads.
"""
from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import sys

import numpy as np

from .control import EvaluationResult, SeriesControl
from .errors import ConvergenceError, DihedralBesselError
from .gbf_series import (
    DihedralParams,
    PolarPoint,
    gbf_closed_b2_k0,
    gbf_orbit_k0,
    gbf_orbit_k1,
    gbf_series,
)
from .integral_rep import C_ODD_CALIBRATED, gbf_corollary_even, gbf_integral
from .intertwine import PREFACTOR_MODES, HarmonicMonomial, intertwine_invariant
from .verify import SUITES, VerifyConfig, ordered_map, run_verify, thread_count

METHODS = ("series", "integral", "corollary", "orbit0", "orbit1", "closed0")
CSV_COLUMNS = ("rho", "phi", "r", "theta", "value", "est_error", "terms_used", "nodes_used", "method")

EXIT_OK, EXIT_USAGE, EXIT_CONVERGENCE, EXIT_VERIFY = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_axis(text):
    """``"1.5"`` -> [1.5]; ``"0:1:5"`` -> five evenly spaced values."""
    parts = text.split(":")
    try:
        if len(parts) == 1:
            return [float(parts[0])]
        if len(parts) == 3:
            start, stop, count = float(parts[0]), float(parts[1]), int(parts[2])
            if count < 1:
                raise UsageError(f"grid count must be >= 1 in {text!r}")
            return [float(v) for v in np.linspace(start, stop, count)]
    except ValueError as exc:
        raise UsageError(f"bad coordinate {text!r}: {exc}") from None
    raise UsageError(f"coordinate must be a number or start:stop:count, got {text!r}")


def _params(args):
    return DihedralParams(args.p, args.k0, args.k1)


def _control(args):
    if not args.tol > 0:
        raise UsageError("--tol must be > 0")
    return SeriesControl(max_terms=args.max_terms, rel_tol=args.tol)


def _c_odd(args):
    return C_ODD_CALIBRATED if args.c_odd_override is None else args.c_odd_override


def applicable_methods(params: DihedralParams):
    out = ["series"]
    if params.p == 2 and params.gamma > 0:
        out += ["integral", "corollary"]
    if params.k0 == 0 and params.k1 == 0:
        out.append("orbit0")
        if params.p == 2:
            out.append("closed0")
    if params.k0 == 1 and params.k1 == 1:
        out.append("orbit1")
    return out


def evaluate(method, params, x, y, ctrl, quad_nodes, c_odd) -> EvaluationResult:
    if method not in applicable_methods(params):
        raise UsageError(f"method {method!r} does not apply to p={params.p}, k=({params.k0}, {params.k1})")
    if method == "series":
        return gbf_series(params, x, y, ctrl)
    if method == "integral":
        return gbf_integral(params, x, y, ctrl=ctrl, n=quad_nodes, c_odd=c_odd)
    if method == "corollary":
        n = quad_nodes
        return EvaluationResult(gbf_corollary_even(params, x, y, n=n), 0.0, 0, n * n)
    if method == "orbit0":
        return EvaluationResult(gbf_orbit_k0(params.p, x, y), 0.0, 0, 4 * params.p)
    if method == "orbit1":
        return EvaluationResult(gbf_orbit_k1(params.p, x, y), 0.0, 0, 4 * params.p)
    return EvaluationResult(gbf_closed_b2_k0(x, y), 0.0, 0, 4)


def _grid(args):
    axes = [parse_axis(a) for a in (args.rho, args.phi, args.r, args.theta)]
    return list(itertools.product(*axes))


def _records(args, methods):
    params = _params(args)
    ctrl = _control(args)
    c_odd = _c_odd(args)
    for name in methods:
        if name not in applicable_methods(params):
            raise UsageError(f"method {name!r} does not apply to p={params.p}, k=({params.k0}, {params.k1})")

    def one(point):
        rho, phi, r, theta = point
        if rho < 0 or r < 0:
            raise UsageError("radii must be >= 0")
        x = PolarPoint.folded(rho, phi, params.p)
        y = PolarPoint.folded(r, theta, params.p)
        rows = []
        for name in methods:
            res = evaluate(name, params, x, y, ctrl, args.quad_nodes, c_odd)
            rows.append({
                "rho": rho, "phi": phi, "r": r, "theta": theta,
                "value": float(res.value), "est_error": float(res.est_error),
                "terms_used": int(res.terms_used), "nodes_used": int(res.nodes_used),
                "method": name,
            })
        return rows

    per_point = ordered_map(one, _grid(args), thread_count())
    return [row for rows in per_point for row in rows]


def _fmt(value):
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def format_records(records, output):
    if output == "json":
        return json.dumps(records, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for rec in records:
        writer.writerow([_fmt(rec[c]) for c in CSV_COLUMNS])
    return buf.getvalue()


def cmd_eval(args):
    sys.stdout.write(format_records(_records(args, [args.method]), args.output))
    return EXIT_OK


def cmd_table(args):
    methods = args.methods or applicable_methods(_params(args))
    sys.stdout.write(format_records(_records(args, methods), args.output))
    return EXIT_OK


def cmd_intertwine(args):
    params = _params(args)
    mono = HarmonicMonomial(args.kappa, args.m)
    y = PolarPoint.folded(args.r, args.theta, params.p)
    value = intertwine_invariant(params, mono, y, args.prefactor_mode)
    record = {"kappa": args.kappa, "m": args.m, "r": args.r, "theta": args.theta,
              "value": value, "prefactor_mode": args.prefactor_mode}
    if args.output == "json":
        sys.stdout.write(json.dumps(record, indent=2) + "\n")
    else:
        cols = list(record)
        sys.stdout.write(",".join(cols) + "\n" + ",".join(_fmt(record[c]) for c in cols) + "\n")
    return EXIT_OK


def cmd_verify(args):
    cfg = VerifyConfig(seed=args.seed, c_odd=_c_odd(args), prefactor_mode=args.prefactor_mode,
                       quad_nodes=args.quad_nodes, threads=thread_count())
    report = run_verify(cfg, args.suite)
    sys.stdout.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
    return EXIT_OK if report["passed"] else EXIT_VERIFY


def _nonneg_int(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _pos_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=_pos_int, default=2, help="dihedral index: group I_2(2p)")
    common.add_argument("--k0", type=float, default=0.0)
    common.add_argument("--k1", type=float, default=0.0)
    common.add_argument("--tol", type=float, default=1e-16, help="relative series tolerance")
    common.add_argument("--max-terms", type=_pos_int, default=500)
    common.add_argument("--quad-nodes", type=_pos_int, default=48, help="nodes per quadrature axis")
    common.add_argument("--output", choices=("json", "csv"), default="json")
    common.add_argument("--c-odd-override", type=float, default=None,
                        help=f"odd-branch coefficient (default {C_ODD_CALIBRATED})")
    common.add_argument("--prefactor-mode", choices=PREFACTOR_MODES, default="calibrated")

    point = argparse.ArgumentParser(add_help=False)
    for name, default in (("--rho", "1"), ("--phi", "0"), ("--r", "1"), ("--theta", "0")):
        point.add_argument(name, default=default, help="value or start:stop:count")

    parser = _Parser(prog="dihedral-bessel", description="Generalized Bessel functions of dihedral type.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_eval = sub.add_parser("eval", parents=[common, point], help="evaluate one method")
    p_eval.add_argument("--method", choices=METHODS, default="series")
    p_eval.set_defaults(func=cmd_eval)

    p_table = sub.add_parser("table", parents=[common, point], help="evaluate all applicable methods")
    p_table.add_argument("--method", dest="methods", action="append", choices=METHODS,
                         help="restrict to these methods (repeatable)")
    p_table.set_defaults(func=cmd_table)

    p_int = sub.add_parser("intertwine", parents=[common], help="intertwining operator on |y|^2kappa Y_4m")
    p_int.add_argument("--kappa", type=_nonneg_int, default=0)
    p_int.add_argument("--m", type=_nonneg_int, default=0)
    p_int.add_argument("--r", type=float, default=1.0)
    p_int.add_argument("--theta", type=float, default=0.0)
    p_int.set_defaults(func=cmd_intertwine)

    p_ver = sub.add_parser("verify", parents=[common], help="run the identity suites")
    p_ver.add_argument("--seed", type=_nonneg_int, default=0)
    p_ver.add_argument("--suite", action="append", choices=SUITES, help="run only these suites (repeatable)")
    p_ver.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE
    except (UsageError, DihedralBesselError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
