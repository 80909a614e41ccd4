"""Command-line front end.

Usage:
    gpdmf solve system.json [--method rref] [-o result.json]
    gpdmf sample "<2; 2, 3, 0.5, 0.5>" --samples 101 -o curve.csv
    gpdmf convert --trapezoid=-3,1,3,6 [--left-cp=x,y --right-cp=x,y]
    gpdmf rref system.json

Exit status: 0 on success, 2 when the system is inconsistent, 1 on any
input or runtime error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Sequence

import numpy as np

from . import serialize as ser
from .errors import DimensionMismatch, FuzzyError, ParseError
from .ffls import ffls_solve, fuzzy_gauss_eliminate, fuzzy_mat_vec
from .membership import ControlPoint, membership_sample, trapezoid_to_pdmf
from .number import DEFAULT_TOL
from .sfls import cramer_solve, mat_vec_apply, real_rref, sfls_solve
from .vector import SolutionSet, coord_block

EXIT_OK, EXIT_ERROR, EXIT_INCONSISTENT = 0, 1, 2

SFLS_METHODS = ("rref", "cramer")
FFLS_METHODS = ("coordinate", "fuzzy-gauss")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


def _read_text(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8", newline="\n")


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _input_path(args) -> str | None:
    if args.input_file and args.input:
        raise ParseError("give the input either positionally or with --input, not both")
    return args.input or args.input_file


def _load_system(args) -> ser.SystemSpec:
    path = _input_path(args)
    return ser.system_from_json(ser.load_json_text(_read_text(path), path or "stdin"))


def _max_abs(arr: np.ndarray) -> float:
    return float(np.max(np.abs(arr))) if arr.size else 0.0


def _solve_spec(spec: ser.SystemSpec, method: str | None, tol: float):
    """Returns (solution, method used, residual function for one vector, homogeneous residual function)."""
    if spec.type == "ffls":
        if spec.b is None:
            raise ParseError("b: missing field")
        method = method or "coordinate"
        if method not in FFLS_METHODS:
            raise ParseError(f"method {method!r} does not apply to an ffls system")
        sol = ffls_solve(spec.A, spec.b, method, tol)
        def res(x):
            return (fuzzy_mat_vec(spec.A, x) - spec.b).coords
        def hom(v):
            return fuzzy_mat_vec(spec.A, v).coords
        return sol, method, res, hom

    if spec.type == "dual":
        if spec.A.shape != spec.B.shape or len(spec.Y) != len(spec.Z):
            raise DimensionMismatch(f"A is {spec.A.shape}, B is {spec.B.shape}, "
                                    f"Y has length {len(spec.Y)}, Z has length {len(spec.Z)}")
        M = spec.A - spec.B
        rhs = spec.Z - spec.Y
        def res(x):
            lhs = mat_vec_apply(spec.A, x) + spec.Y
            return (lhs - (mat_vec_apply(spec.B, x) + spec.Z)).coords
    else:
        if spec.b is None:
            raise ParseError("b: missing field")
        M, rhs = spec.A, spec.b
        def res(x):
            return (mat_vec_apply(M, x) - rhs).coords
    def hom(v):
        return mat_vec_apply(M, v).coords

    method = method or "rref"
    if method not in SFLS_METHODS:
        raise ParseError(f"method {method!r} does not apply to a {spec.type} system")
    if M.shape[0] != len(rhs):
        raise DimensionMismatch(f"A has {M.shape[0]} rows but the right-hand side has length {len(rhs)}")
    if method == "cramer":
        x = cramer_solve(M, rhs, tol)
        sol = SolutionSet("unique", x, (), M.shape[0], {"method": "cramer"})
    else:
        sol = sfls_solve(M, rhs, tol)
    return sol, method, res, hom


def cmd_solve(args) -> int:
    spec = _load_system(args)
    tol = args.tolerance if args.tolerance is not None else (spec.tolerance or DEFAULT_TOL)
    start = time.perf_counter()
    sol, method, res, hom = _solve_spec(spec, args.method or spec.method, tol)
    elapsed = time.perf_counter() - start

    diagnostics = {"method": method, "tolerance": tol, "rank": ser.solution_to_json(sol)["rank"]}
    diagnostics.update({k: v for k, v in sol.diagnostics.items() if k != "method"})
    if sol.particular is not None:
        diagnostics["residual"] = {
            "particular_max_abs": _max_abs(res(sol.particular)),
            "basis_max_abs": max((_max_abs(hom(v)) for v in sol.basis), default=0.0),
        }
    result = {
        "type": spec.type,
        "solution": ser.solution_to_json(sol),
        "diagnostics": diagnostics,
        "timing": {"seconds": elapsed},
    }
    _write_text(args.output, _dump(result))
    return EXIT_OK if sol.consistent else EXIT_INCONSISTENT


def _pair(text: str, what: str) -> tuple[float, ...]:
    try:
        return tuple(float(v) for v in text.split(","))
    except ValueError:
        raise ParseError(f"{what}: expected comma-separated numbers, got {text!r}") from None


def cmd_sample(args) -> int:
    if args.literal and args.input:
        raise ParseError("give either a literal or --input, not both")
    if args.literal:
        a = ser.parse_literal(args.literal)
    elif args.input:
        a = ser.number_from_json(ser.load_json_text(_read_text(args.input), args.input), "number")
    else:
        raise ParseError("sample needs a fuzzy-number literal or --input FILE")
    if args.samples < 2:
        raise ParseError("--samples must be at least 2")
    lines = ["t,membership"]
    lines += [f"{t:.6f},{f:.6f}" for t, f in membership_sample(a, args.samples)]
    _write_text(args.output, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_convert(args) -> int:
    trap = _pair(args.trapezoid, "--trapezoid")
    if len(trap) != 4:
        raise ParseError(f"--trapezoid needs 4 numbers, got {len(trap)}")
    cps = []
    for flag, text in (("--left-cp", args.left_cp), ("--right-cp", args.right_cp)):
        if text is None:
            cps.append(None)
            continue
        xy = _pair(text, flag)
        if len(xy) != 2:
            raise ParseError(f"{flag} needs 2 numbers, got {len(xy)}")
        cps.append(ControlPoint(*xy))
    a = trapezoid_to_pdmf(*trap, left_cp=cps[0], right_cp=cps[1])
    _write_text(args.output, json.dumps(ser.number_to_json(a)) + "\n")
    return EXIT_OK


def cmd_rref(args) -> int:
    spec = _load_system(args)
    tol = args.tolerance if args.tolerance is not None else (spec.tolerance or DEFAULT_TOL)
    if spec.type == "ffls":
        M = spec.A if spec.b is None else spec.A.augment(spec.b)
        rep = fuzzy_gauss_eliminate(M, pivot_limit=spec.A.cols, tol=tol)
        out = ser.elimination_report_to_json(rep)
    else:
        if spec.type == "dual":
            if spec.A.shape != spec.B.shape:
                raise DimensionMismatch(f"A is {spec.A.shape} but B is {spec.B.shape}")
            A, b = spec.A - spec.B, spec.Z - spec.Y
        else:
            A, b = spec.A, spec.b
        if b is not None and len(b) != A.shape[0]:
            raise DimensionMismatch(f"A has {A.shape[0]} rows but b has length {len(b)}")
        n = A.shape[1]
        M = A if b is None else np.hstack([A, coord_block(b)])
        out = ser.rref_report_to_json(real_rref(M, tol, pivot_limit=n))
    _write_text(args.output, _dump(out))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gpdmf", description="Fuzzy linear systems over the Gaussian-PDMF space.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def io_flags(p, with_input=True):
        if with_input:
            p.add_argument("input", nargs="?", help="system JSON file (default: stdin)")
            p.add_argument("-i", "--input", dest="input_file", help="system JSON file")
        p.add_argument("-o", "--output", help="output file (default: stdout)")
        p.add_argument("--tolerance", type=float, default=None,
                       help=f"rank / unit tolerance (default {DEFAULT_TOL:g})")

    p = sub.add_parser("solve", help="solve an sfls, dual or ffls system")
    io_flags(p)
    p.add_argument("--method", choices=SFLS_METHODS + FFLS_METHODS)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("sample", help="membership curve as CSV")
    p.add_argument("literal", nargs="?", help='fuzzy literal such as "<2; 2, 3, 0.5, 0.5>"')
    p.add_argument("-i", "--input", help="JSON file holding one fuzzy number")
    p.add_argument("-o", "--output", help="CSV file (default: stdout)")
    p.add_argument("--samples", type=int, default=201)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("convert", help="trapezoid to Gaussian-PDMF")
    p.add_argument("--trapezoid", required=True, help="a,b,c,d (write --trapezoid=-3,1,3,6 for negatives)")
    p.add_argument("--left-cp", help="x,y control point on the left branch")
    p.add_argument("--right-cp", help="x,y control point on the right branch")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("rref", help="elimination report for a system's matrix")
    io_flags(p)
    p.set_defaults(func=cmd_rref)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except FuzzyError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except SystemExit as exc:  # --help
        return EXIT_OK if exc.code in (0, None) else EXIT_ERROR
    except Exception as exc:  # noqa: BLE001 - every path must map to an exit code
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
