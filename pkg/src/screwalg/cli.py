"""Command-line front end: ``screwalg {analyze,equilibrium,reduce,power}``.

Exit status: 0 success (or equilibrium), 1 negative analysis result,
2 unreadable input, 3 input that parses but fails validation.
"""
from __future__ import annotations

import argparse
import sys

import numpy as np

from . import __version__
from .duality import (
    AngularVelocity,
    Twist,
    aggregate_wrench,
    bivector_to_torque,
    power,
    scalar_invariant,
    vector_to_covector,
)
from .errors import ScrewAlgError
from .exterior import DEFAULT_TOL, magnitude_b
from .screw import (
    LineBivector,
    central_axis,
    classify,
    decompose_at_points,
    trivector_invariant,
)
from .serialize import (
    ProblemParseError,
    ProblemValidationError,
    clean_float,
    dumps,
    load_points,
    load_problem,
    load_twist,
    pairs_to_json,
    triples_to_json,
    vector_to_json,
)
from .statics import is_equilibrium, residuals, resultant

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_PARSE = 2
EXIT_VALIDATION = 3


def _fmt_vec(v):
    return "(" + ", ".join(f"{clean_float(x):.12g}" for x in v) + ")"


def _fmt_pairs(d):
    if not d:
        return "{}"
    return "{" + ", ".join(f"({k}): {v:.12g}" for k, v in d.items()) + "}"


def _emit(report, as_json, lines, out):
    if as_json:
        out.write(dumps(report) + "\n")
    else:
        out.write("\n".join(lines) + "\n")


def analyze_report(problem, tol):
    system = problem.force_system()
    m = resultant(system)
    kind = classify(m, tol, system.scale())
    report = {
        "command": "analyze",
        "dimension": problem.dimension,
        "tol": tol,
        "vector_invariant": vector_to_json(m.u),
        "moment_at_origin": pairs_to_json(m.m0),
        "trivector_invariant": triples_to_json(trivector_invariant(m)),
        "classification": kind.kind,
        "equilibrium": is_equilibrium(system, tol),
        "couple": pairs_to_json(kind.couple) if kind.kind == "couple" else None,
        "central_axis": None,
    }
    if kind.kind in ("sliding", "general"):
        axis = central_axis(m)
        report["central_axis"] = {
            "point": vector_to_json(axis.Q),
            "direction": vector_to_json(axis.u),
            "beta": pairs_to_json(axis.beta),
            "beta_magnitude": clean_float(magnitude_b(axis.beta)),
        }
    if problem.metadata:
        report["metadata"] = problem.metadata
    return report


def _analyze_lines(r):
    lines = [
        f"dimension: {r['dimension']}   tol: {r['tol']:g}",
        f"vector invariant u: {_fmt_vec(r['vector_invariant'])}",
        f"moment at origin: {_fmt_pairs(r['moment_at_origin'])}",
        f"trivector invariant: {_fmt_pairs(r['trivector_invariant'])}",
        f"classification: {r['classification']}",
        f"equilibrium: {'yes' if r['equilibrium'] else 'no'}",
    ]
    if r["couple"] is not None:
        lines.append(f"couple: {_fmt_pairs(r['couple'])}")
    ax = r["central_axis"]
    if ax is not None:
        lines += [
            f"central axis point Q: {_fmt_vec(ax['point'])}",
            f"axis direction u: {_fmt_vec(ax['direction'])}",
            f"residual couple beta: {_fmt_pairs(ax['beta'])}   |beta| = {ax['beta_magnitude']:.12g}",
        ]
    return lines


def cmd_analyze(args, out):
    report = analyze_report(load_problem(args.problem), args.tol)
    _emit(report, args.json, _analyze_lines(report), out)
    return EXIT_OK


def cmd_equilibrium(args, out):
    problem = load_problem(args.problem)
    system = problem.force_system()
    force, moment = residuals(system)
    ok = is_equilibrium(system, args.tol)
    report = {
        "command": "equilibrium",
        "dimension": problem.dimension,
        "tol": args.tol,
        "equilibrium": ok,
        "residual_force_norm": clean_float(force),
        "residual_moment_norm": clean_float(moment),
        "scale": clean_float(system.scale()),
    }
    lines = [
        f"equilibrium: {'yes' if ok else 'no'}   (tol {args.tol:g})",
        f"residual force |u|: {force:.12g}",
        f"residual moment |M(O0)|: {moment:.12g}",
    ]
    _emit(report, args.json, lines, out)
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_reduce(args, out):
    problem = load_problem(args.problem)
    n = problem.dimension
    points = load_points(args.points, n)
    if len(points) != n + 1:
        raise ProblemValidationError(f"points: need {n + 1} points in dimension {n}, got {len(points)}")
    m = resultant(problem.force_system())
    parts = decompose_at_points(m, points, args.tol)
    total = LineBivector.zero(n)
    for sv in parts:
        total = total + sv.as_screw()
    residual = float(np.linalg.norm(total.coefficients() - m.coefficients()))
    report = {
        "command": "reduce",
        "dimension": n,
        "tol": args.tol,
        "sliding_vectors": [
            {"point": vector_to_json(sv.point), "vector": vector_to_json(sv.u)} for sv in parts
        ],
        "residual": clean_float(residual),
        "relative_residual": clean_float(residual / max(m.scale(), 1.0)),
    }
    lines = [f"{len(parts)} sliding vectors:"]
    lines += [f"  {_fmt_vec(sv.u)} at {_fmt_vec(sv.point)}" for sv in parts]
    lines.append(f"recomposition residual: {residual:.3g}")
    _emit(report, args.json, lines, out)
    return EXIT_OK


def cmd_power(args, out):
    problem = load_problem(args.problem)
    tw = load_twist(args.twist)
    n = problem.dimension
    if tw.dimension != n:
        raise ProblemValidationError(f"twist dimension {tw.dimension} differs from problem dimension {n}")
    twist = Twist(tw.q, AngularVelocity.from_coords(n, tw.omega.coeffs), tw.v_q)
    forces = [(p, vector_to_covector(u)) for p, u in problem.forces]
    # a couple c = (Q - P) ∧ v acts as the torque (Q - P) ⊓ v = -c
    torques = [-bivector_to_torque(c) for c in problem.couples]
    direct = power(forces, twist, torques)
    wrench = aggregate_wrench(forces, torques=torques, dim=n)
    invariant = scalar_invariant(wrench, twist, np.zeros(n))
    report = {
        "command": "power",
        "dimension": n,
        "tol": args.tol,
        "power_direct": clean_float(direct),
        "power_invariant": clean_float(invariant),
        "difference": clean_float(abs(direct - invariant)),
    }
    lines = [
        f"power (sum over forces): {direct:.12g}",
        f"power (scalar invariant): {invariant:.12g}",
        f"difference: {abs(direct - invariant):.3g}",
    ]
    _emit(report, args.json, lines, out)
    return EXIT_OK


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=DEFAULT_TOL, help="relative tolerance (default 1e-9)")
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(prog="screwalg", description="Sliding-vector and screw analysis of force systems.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="invariants, classification and central axis")
    p.add_argument("problem", help="problem file ('-' for stdin)")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("equilibrium", parents=[common], help="exit 0 iff the system is in equilibrium")
    p.add_argument("problem")
    p.set_defaults(func=cmd_equilibrium)

    p = sub.add_parser("reduce", parents=[common], help="split the resultant into n sliding vectors")
    p.add_argument("problem")
    p.add_argument("--points", required=True, help="file with n+1 affinely independent points")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("power", parents=[common], help="power of the forces against a twist")
    p.add_argument("problem")
    p.add_argument("twist", help="twist file")
    p.set_defaults(func=cmd_power)
    return parser


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (ProblemParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ProblemValidationError, ScrewAlgError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
