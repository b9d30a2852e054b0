"""Command-line front end.

Exit codes: 0 success or pass, 1 forbidden verdict, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import jsonio
from .atomic import AtomicSystemSpec, HamiltonianSet, analyze_hamiltonians, analyze_system, build_hamiltonians
from .kinematics import DensityMatrixError, Observable, expectation, expectation_bounds, extremal_states, validate_density
from .liealg import classify
from .reachability import TargetUnitary, check_unitary, sp_counterexample

EXIT_OK, EXIT_FORBIDDEN, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {path}: {exc}") from None


def _load_spec(path) -> AtomicSystemSpec:
    try:
        return AtomicSystemSpec.from_dict(_load_json(path))
    except (ValueError, TypeError, KeyError) as exc:
        raise InputError(f"invalid system spec {path}: {exc}") from None


def _load_raw(path) -> HamiltonianSet:
    data = _load_json(path)
    if not isinstance(data, dict) or "hamiltonians" not in data:
        raise InputError(f"{path}: expected an object with a 'hamiltonians' list (drift first)")
    if set(data) - {"hamiltonians", "labels"}:
        raise InputError(f"{path}: unknown fields {sorted(set(data) - {'hamiltonians', 'labels'})}")
    try:
        mats = [jsonio.decode_matrix(m) for m in data["hamiltonians"]]
        if len(mats) < 2:
            raise ValueError("need a drift Hamiltonian and at least one control")
        return HamiltonianSet.from_matrices(mats[0], mats[1:], data.get("labels"))
    except (ValueError, TypeError) as exc:
        raise InputError(f"invalid Hamiltonians in {path}: {exc}") from None


def _format_entry(v: float) -> str:
    if abs(v - round(v)) < 1e-9:
        return f"{round(v) + 0:+d}" if round(v) else " 0"
    return f"{v:+.6g}"


def _text_classification(cls, indent="") -> list:
    d = cls.degrees
    lines = [
        f"{indent}algebra: {cls.label}",
        f"{indent}dimension: {cls.dimension}",
        f"{indent}identity component: {'yes' if cls.has_identity_component else 'no'}",
        f"{indent}completely controllable: {'yes' if d.completely else 'no'}",
        f"{indent}density-matrix controllable: {'yes' if d.density_matrix else 'no'}",
        f"{indent}observable controllable: {'yes' if d.observable else 'no'}",
        f"{indent}pure-state controllable: {'yes' if d.pure_state else 'no'}",
    ]
    if cls.symplectic is not None:
        lines.append(f"{indent}symplectic form J (real part):")
        lines += [indent + "  " + " ".join(_format_entry(v) for v in row) for row in np.real(cls.symplectic.J)]
    return lines


def _text_report(report) -> str:
    lines = [f"states: {report.dim}"]
    lines += _text_classification(report.classification)
    if report.coupled_indices != tuple(range(report.dim)):
        lines.append(f"coupled states {list(report.coupled_indices)}:")
        lines += _text_classification(report.effective, "  ")
    for c in report.components if len(report.components) > 1 else ():
        if c.trivial:
            lines.append(f"component {list(c.indices)}: uncoupled")
        else:
            lines.append(f"component {list(c.indices)}:")
            lines += _text_classification(c.classification, "  ")
    lines += [f"warning: {w}" for w in report.warnings]
    lines += [f"summary: {s}" for s in report.summary]
    return "\n".join(lines)


def cmd_analyze(args) -> int:
    if (args.spec is None) == (args.raw_hamiltonians is None):
        raise InputError("give exactly one of a spec file or --raw-hamiltonians")
    if args.raw_hamiltonians is not None:
        report = analyze_hamiltonians(_load_raw(args.raw_hamiltonians))
    else:
        report = analyze_system(_load_spec(args.spec))
    if args.format == "json":
        print(jsonio.dumps(jsonio.report_to_dict(report)))
    else:
        print(_text_report(report))
    return EXIT_OK


def cmd_check_unitary(args) -> int:
    spec = _load_spec(args.spec)
    try:
        U = TargetUnitary(jsonio.decode_matrix(_load_json(args.unitary)),
                          "strict" if args.strict else "projective")
    except ValueError as exc:
        raise InputError(f"invalid unitary {args.unitary}: {exc}") from None
    hset = build_hamiltonians(spec)
    if U.dim != hset.dim:
        raise InputError(f"unitary is {U.dim}x{U.dim} but the system has {hset.dim} states")
    verdict = check_unitary(U, classify(hset.generator_set()), hset)
    if args.format == "json":
        print(jsonio.dumps({
            "verdict": verdict.verdict,
            "reason": verdict.reason,
            "witness": verdict.witness,
            "details": verdict.details,
        }))
    else:
        print(f"verdict: {verdict.verdict}")
        if verdict.forbidden:
            print(f"reason: {verdict.reason}")
        print(f"witness: {verdict.witness!r}")
        for name, value in sorted(verdict.details.items()):
            print(f"  {name}: {value!r}")
    return EXIT_FORBIDDEN if verdict.forbidden else EXIT_OK


def cmd_bounds(args) -> int:
    try:
        rho = validate_density(jsonio.decode_wrapped(_load_json(args.rho), "density"))
        A = Observable.from_matrix(jsonio.decode_wrapped(_load_json(args.observable), "observable"))
        lo, hi = expectation_bounds(rho, A)
    except DensityMatrixError as exc:
        raise InputError(f"{type(exc).__name__}: {exc}") from None
    except ValueError as exc:
        raise InputError(str(exc)) from None
    value = expectation(rho, A)
    rho_minus, rho_plus = extremal_states(rho, A)
    if args.format == "json":
        print(jsonio.dumps({
            "lo": lo,
            "hi": hi,
            "expectation": value,
            "rho_minus": jsonio.encode_matrix(rho_minus.matrix),
            "rho_plus": jsonio.encode_matrix(rho_plus.matrix),
        }))
    else:
        print(f"lo: {lo!r}\nhi: {hi!r}\nexpectation: {value!r}")
    return EXIT_OK


def cmd_counterexample(args) -> int:
    try:
        weights = [float(w) for w in args.weights.split(",")]
        ce = sp_counterexample(args.ell, weights)
    except ValueError as exc:
        raise InputError(f"bad weights: {exc}") from None
    print(jsonio.dumps({
        "ell": args.ell,
        "weights": weights,
        "rho0": jsonio.encode_matrix(ce.rho0.matrix),
        "rho1": jsonio.encode_matrix(ce.rho1.matrix),
        "x": jsonio.encode_matrix(ce.x),
        "y": jsonio.encode_matrix(ce.y),
        "checks": ce.verify(),
    }))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qcontrollability", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="classify an atomic system or explicit Hamiltonians")
    p.add_argument("spec", nargs="?", help="atomic system spec (JSON)")
    p.add_argument("--raw-hamiltonians", metavar="PATH",
                   help='JSON {"hamiltonians": [H0, H1, ...]} in the matrix encoding')
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("check-unitary", help="necessary-condition test for a target unitary")
    p.add_argument("spec")
    p.add_argument("unitary")
    p.add_argument("--strict", action="store_true", help="global phases are significant")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_check_unitary)

    p = sub.add_parser("bounds", help="kinematic bounds of an expectation value")
    p.add_argument("rho")
    p.add_argument("observable")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("counterexample", help="states an sp-type system cannot connect")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--weights", required=True, help="comma-separated, strictly increasing")
    p.set_defaults(func=cmd_counterexample)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
