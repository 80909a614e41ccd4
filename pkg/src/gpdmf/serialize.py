"""JSON wire formats, fuzzy literals and system files.

A fuzzy number travels as ``[x, d_minus, d_plus, mu_minus, mu_plus]`` (an
object with those keys is accepted on input). Floats are written with
Python's shortest round-trip repr, so every value reparses bit-for-bit.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from typing import Any

import numpy as np

from .errors import FuzzyError, ParseError
from .ffls import EliminationReport, FuzzyMatrix, RowOp
from .number import FuzzyNumber, from_coords, make
from .sfls import RrefReport, as_real_matrix
from .vector import FuzzyVector, SolutionSet

FIELDS = ("x", "d_minus", "d_plus", "mu_minus", "mu_plus")


def number_to_json(a: FuzzyNumber) -> list[float]:
    return list(a.params)


def number_from_json(obj: Any, where: str = "value") -> FuzzyNumber:
    if isinstance(obj, dict):
        missing = [k for k in FIELDS if k not in obj]
        if missing:
            raise ParseError(f"{where}: missing field(s) {', '.join(missing)}")
        vals = [obj[k] for k in FIELDS]
    elif isinstance(obj, (list, tuple)):
        if len(obj) != 5:
            raise ParseError(f"{where}: expected 5 numbers, got {len(obj)}")
        vals = list(obj)
    else:
        raise ParseError(f"{where}: expected a 5-number array or object, got {type(obj).__name__}")
    for k, v in zip(FIELDS, vals):
        if isinstance(v, bool) or not isinstance(v, (int, float)):
            raise ParseError(f"{where}.{k}: expected a number, got {v!r}")
    try:
        return make(*vals)
    except FuzzyError as exc:
        raise type(exc)(f"{where}: {exc}") from None


def vector_to_json(v: FuzzyVector) -> list[list[float]]:
    return [number_to_json(a) for a in v]


def vector_from_json(obj: Any, where: str) -> FuzzyVector:
    if not isinstance(obj, list):
        raise ParseError(f"{where}: expected an array of fuzzy numbers")
    return FuzzyVector.of(number_from_json(e, f"{where}[{i}]") for i, e in enumerate(obj))


def fuzzy_matrix_to_json(A: FuzzyMatrix) -> list[list[list[float]]]:
    return [[number_to_json(e) for e in row] for row in A.entries()]


def fuzzy_matrix_from_json(obj: Any, where: str) -> FuzzyMatrix:
    if not isinstance(obj, list) or not all(isinstance(r, list) for r in obj):
        raise ParseError(f"{where}: expected an array of rows")
    return FuzzyMatrix.of(
        [number_from_json(e, f"{where}[{i}][{j}]") for j, e in enumerate(row)]
        for i, row in enumerate(obj)
    )


def real_matrix_from_json(obj: Any, where: str) -> np.ndarray:
    if not isinstance(obj, list) or not all(isinstance(r, list) for r in obj):
        raise ParseError(f"{where}: expected an array of rows")
    for i, row in enumerate(obj):
        for j, v in enumerate(row):
            if isinstance(v, bool) or not isinstance(v, (int, float)):
                raise ParseError(f"{where}[{i}][{j}]: expected a number, got {v!r}")
    widths = {len(r) for r in obj}
    if len(widths) > 1:
        raise ParseError(f"{where}: ragged matrix, row lengths {sorted(widths)}")
    return as_real_matrix(obj) if obj else np.zeros((0, 0))


# -- literals --------------------------------------------------------------

_LITERAL = re.compile(r"^\s*[<⟨]?\s*([^;<>⟨⟩]+);([^<>⟨⟩]+?)\s*[>⟩]?\s*$")


def parse_literal(text: str) -> FuzzyNumber:
    """Parse ``<x; dm, dp, mum, mup>``, the angle-bracket form, or ``x;dm,dp,mum,mup``.

    A JSON array literal is accepted too.
    """
    s = text.strip()
    if s.startswith("["):
        try:
            return number_from_json(json.loads(s), "literal")
        except json.JSONDecodeError as exc:
            raise ParseError(f"literal: {exc}") from None
    match = _LITERAL.match(s)
    if not match:
        raise ParseError(f"cannot parse fuzzy literal {text!r}")
    parts = [match.group(1)] + match.group(2).split(",")
    if len(parts) != 5:
        raise ParseError(f"fuzzy literal needs 5 numbers, got {len(parts)} in {text!r}")
    try:
        vals = [_parse_real(p) for p in parts]
    except ValueError:
        raise ParseError(f"non-numeric entry in fuzzy literal {text!r}") from None
    return make(*vals)


def _parse_real(token: str) -> float:
    t = token.strip()
    # "e" alone is Euler's number, handy for <1; e, e, 1, 1>
    if t == "e":
        return math.e
    return float(t)


# -- systems ---------------------------------------------------------------

@dataclass
class SystemSpec:
    type: str
    A: Any
    b: FuzzyVector | None = None
    B: np.ndarray | None = None
    Y: FuzzyVector | None = None
    Z: FuzzyVector | None = None
    method: str | None = None
    tolerance: float | None = None


def load_json_text(text: str, source: str = "input") -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{source}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def system_from_json(obj: Any) -> SystemSpec:
    if not isinstance(obj, dict):
        raise ParseError("system file must hold a JSON object")
    kind = obj.get("type")
    if kind not in ("sfls", "dual", "ffls"):
        raise ParseError(f"type: expected 'sfls', 'dual' or 'ffls', got {kind!r}")
    if "A" not in obj:
        raise ParseError("A: missing field")
    tol = obj.get("tolerance")
    if tol is not None and (isinstance(tol, bool) or not isinstance(tol, (int, float))):
        raise ParseError(f"tolerance: expected a number, got {tol!r}")
    method = obj.get("method")
    if method is not None and not isinstance(method, str):
        raise ParseError(f"method: expected a string, got {method!r}")
    if kind == "ffls":
        A = fuzzy_matrix_from_json(obj["A"], "A")
        b = vector_from_json(obj["b"], "b") if "b" in obj else None
        return SystemSpec("ffls", A, b, method=method, tolerance=tol)
    A = real_matrix_from_json(obj["A"], "A")
    if kind == "sfls":
        b = vector_from_json(obj["b"], "b") if "b" in obj else None
        return SystemSpec("sfls", A, b, method=method, tolerance=tol)
    for key in ("B", "Y", "Z"):
        if key not in obj:
            raise ParseError(f"{key}: missing field for a dual system")
    return SystemSpec("dual", A, B=real_matrix_from_json(obj["B"], "B"),
                      Y=vector_from_json(obj["Y"], "Y"), Z=vector_from_json(obj["Z"], "Z"),
                      method=method, tolerance=tol)


def system_to_json(spec: SystemSpec) -> dict:
    out: dict[str, Any] = {"type": spec.type}
    if spec.type == "ffls":
        out["A"] = fuzzy_matrix_to_json(spec.A)
    else:
        out["A"] = np.asarray(spec.A, dtype=float).tolist()
    if spec.b is not None:
        out["b"] = vector_to_json(spec.b)
    if spec.type == "dual":
        out["B"] = np.asarray(spec.B, dtype=float).tolist()
        out["Y"] = vector_to_json(spec.Y)
        out["Z"] = vector_to_json(spec.Z)
    if spec.method is not None:
        out["method"] = spec.method
    if spec.tolerance is not None:
        out["tolerance"] = spec.tolerance
    return out


# -- results ---------------------------------------------------------------

def solution_to_json(sol: SolutionSet) -> dict:
    rank = list(sol.rank) if isinstance(sol.rank, tuple) else sol.rank
    return {
        "status": sol.status,
        "particular": None if sol.particular is None else vector_to_json(sol.particular),
        "basis": [vector_to_json(v) for v in sol.basis],
        "dimension": sol.dimension,
        "rank": rank,
    }


def solution_from_json(obj: dict) -> SolutionSet:
    rank = obj.get("rank", 0)
    part = obj.get("particular")
    return SolutionSet(
        obj["status"],
        None if part is None else vector_from_json(part, "particular"),
        tuple(vector_from_json(v, f"basis[{i}]") for i, v in enumerate(obj.get("basis", []))),
        tuple(rank) if isinstance(rank, list) else rank,
    )


def rref_report_to_json(rep: RrefReport) -> dict:
    return {
        "kind": "real",
        "rref": rep.rref.tolist(),
        "rank": rep.rank,
        "pivot_columns": list(rep.pivot_columns),
        "row_ops": [{"kind": op.kind, "rows": list(op.rows), "scalar": op.scalar} for op in rep.row_ops],
    }


def row_op_to_json(op: RowOp) -> dict:
    out: dict[str, Any] = {"kind": op.kind, "rows": list(op.rows)}
    if op.factor is not None:
        out["factor"] = number_to_json(op.factor)
        # exact coordinates, since exp/log of the display radii is not bit-exact
        out["factor_coords"] = list(op.factor.coords)
    return out


def row_op_from_json(obj: dict) -> RowOp:
    factor = None
    if "factor_coords" in obj:
        factor = from_coords(obj["factor_coords"])
    elif obj.get("factor") is not None:
        factor = number_from_json(obj["factor"], "factor")
    return RowOp(obj["kind"], tuple(obj["rows"]), factor)


def elimination_report_to_json(rep: EliminationReport) -> dict:
    return {
        "kind": "fuzzy",
        "result": fuzzy_matrix_to_json(rep.result),
        "result_coords": rep.result.coords.tolist(),
        "ops": [row_op_to_json(op) for op in rep.ops],
        "pivot_columns": list(rep.pivot_columns),
        "skipped_columns": list(rep.skipped_columns),
        "achieved_rref": rep.achieved_rref,
    }
