"""Fully-fuzzy linear systems over the ring X.

Two solvers are provided. Fuzzy Gauss-Jordan elimination only divides by
units of X and so may stall on a column whose candidates are all zero
divisors. The coordinate solver exploits that X is the product ring R^5 and
solves one real system per coordinate; it always terminates and is the
general-purpose path.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal, Sequence

import numpy as np

from .errors import BadIndex, DimensionMismatch, NotAUnit, NotInV, NotRref
from .number import (
    BASIS, DEFAULT_TOL, ONE, FuzzyNumber, from_coords, invert, is_unit,
    mul, scalar_mul, v_member,
)
from .sfls import RealSolve, as_real_matrix, real_affine_solve
from .vector import FuzzyVector, SolutionSet


class FuzzyMatrix:
    """m x n matrix over X backed by an (m, n, 5) coordinate array."""

    __slots__ = ("_c",)

    def __init__(self, coords):
        c = np.array(coords, dtype=float)
        if c.ndim != 3 or c.shape[2] != 5:
            raise ValueError(f"expected an (m, n, 5) coordinate array, got shape {c.shape}")
        c.setflags(write=False)
        self._c = c

    @classmethod
    def of(cls, rows: Iterable[Iterable[FuzzyNumber]]) -> FuzzyMatrix:
        data = [[e.coords for e in row] for row in rows]
        widths = {len(r) for r in data}
        if len(widths) > 1:
            raise DimensionMismatch(f"ragged fuzzy matrix, row lengths {sorted(widths)}")
        m = len(data)
        n = widths.pop() if widths else 0
        return cls(np.array(data, dtype=float).reshape(m, n, 5))

    @classmethod
    def identity(cls, n: int) -> FuzzyMatrix:
        c = np.zeros((n, n, 5))
        c[np.arange(n), np.arange(n)] = 1.0
        return cls(c)

    @classmethod
    def zeros(cls, m: int, n: int) -> FuzzyMatrix:
        return cls(np.zeros((m, n, 5)))

    @classmethod
    def from_real(cls, A) -> FuzzyMatrix:
        """Entrywise ``a_ij * 1`` (the field V embedding)."""
        A = as_real_matrix(A)
        return cls(np.repeat(A[:, :, None], 5, axis=2))

    @property
    def coords(self) -> np.ndarray:
        return self._c

    @property
    def shape(self) -> tuple[int, int]:
        return self._c.shape[0], self._c.shape[1]

    @property
    def rows(self) -> int:
        return self._c.shape[0]

    @property
    def cols(self) -> int:
        return self._c.shape[1]

    def __getitem__(self, ij: tuple[int, int]) -> FuzzyNumber:
        i, j = ij
        return from_coords(self._c[i, j])

    def entries(self) -> list[list[FuzzyNumber]]:
        return [[from_coords(e) for e in row] for row in self._c]

    def coordinate(self, c: int) -> np.ndarray:
        """Real m x n matrix of coordinate ``c`` of every entry."""
        return np.array(self._c[:, :, c])

    def augment(self, b: FuzzyVector) -> FuzzyMatrix:
        if len(b) != self.rows:
            raise DimensionMismatch(f"matrix has {self.rows} rows but b has length {len(b)}")
        return FuzzyMatrix(np.concatenate([self._c, b.coords[:, None, :]], axis=1))

    def isclose(self, other: FuzzyMatrix, tol: float = DEFAULT_TOL) -> bool:
        return self._c.shape == other._c.shape and bool(np.all(np.abs(self._c - other._c) <= tol))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FuzzyMatrix):
            return NotImplemented
        return self.isclose(other)

    __hash__ = None

    def __repr__(self) -> str:
        return f"FuzzyMatrix({self.entries()!r})"


def fuzzy_mat_vec(A: FuzzyMatrix, x: FuzzyVector) -> FuzzyVector:
    if A.cols != len(x):
        raise DimensionMismatch(f"A has {A.cols} columns but x has length {len(x)}")
    return FuzzyVector(np.einsum("ikc,kc->ic", A.coords, x.coords))


def fuzzy_matmul(A: FuzzyMatrix, B: FuzzyMatrix) -> FuzzyMatrix:
    if A.cols != B.rows:
        raise DimensionMismatch(f"cannot multiply {A.shape} by {B.shape}")
    return FuzzyMatrix(np.einsum("ikc,kjc->ijc", A.coords, B.coords))


def fuzzy_residual(A: FuzzyMatrix, x: FuzzyVector, b: FuzzyVector) -> np.ndarray:
    return (fuzzy_mat_vec(A, x) - b).coords


# -- elementary row operations ---------------------------------------------

RowOpKind = Literal["swap", "scale", "axpy"]


@dataclass(frozen=True)
class RowOp:
    """``swap`` rows (i, j); ``scale`` row (i,) by a unit; ``axpy``: row i += factor * row j."""

    kind: RowOpKind
    rows: tuple[int, ...]
    factor: FuzzyNumber | None = None


def apply_row_op(M: FuzzyMatrix, op: RowOp, tol: float = DEFAULT_TOL) -> FuzzyMatrix:
    c = np.array(M.coords)
    m = M.rows
    for r in op.rows:
        if not 0 <= r < m:
            raise BadIndex(f"row {r} out of range for {m} rows")
    if op.kind == "swap":
        i, j = op.rows
        if i == j:
            raise BadIndex("swap needs two distinct rows")
        c[[i, j]] = c[[j, i]]
    elif op.kind == "scale":
        (i,) = op.rows
        if op.factor is None or not is_unit(op.factor, tol):
            raise NotAUnit(f"row scaling needs a unit factor, got {op.factor!r}")
        c[i] = c[i] * np.array(op.factor.coords)
    elif op.kind == "axpy":
        i, j = op.rows
        if i == j:
            raise BadIndex("axpy needs two distinct rows")
        if op.factor is None:
            raise ValueError("axpy needs a factor")
        c[i] = c[i] + np.array(op.factor.coords) * c[j]
    else:
        raise ValueError(f"unknown row operation {op.kind!r}")
    return FuzzyMatrix(c)


def replay(M: FuzzyMatrix, ops: Sequence[RowOp], tol: float = DEFAULT_TOL) -> FuzzyMatrix:
    for op in ops:
        M = apply_row_op(M, op, tol)
    return M


@dataclass(frozen=True)
class EliminationReport:
    result: FuzzyMatrix
    ops: tuple[RowOp, ...]
    pivot_columns: tuple[int, ...]
    achieved_rref: bool
    skipped_columns: tuple[int, ...] = ()


def _pivot_score(coords: np.ndarray) -> float:
    return float(np.min(np.abs(coords)))


def fuzzy_gauss_eliminate(M: FuzzyMatrix, pivot_limit: int | None = None,
                          tol: float = DEFAULT_TOL) -> EliminationReport:
    """Gauss-Jordan elimination using only unit pivots.

    In each column the pivot is the unit candidate whose smallest absolute
    coordinate is largest (lowest row on ties). Columns without a unit
    candidate are skipped. ``achieved_rref`` holds when every row left
    without a pivot is zero across the first ``pivot_limit`` columns, i.e.
    the result is (I | B) up to a column permutation.
    """
    m, n = M.shape
    limit = n if pivot_limit is None else pivot_limit
    ops: list[RowOp] = []
    pivots: list[int] = []
    skipped: list[int] = []

    def do(op: RowOp) -> None:
        nonlocal M
        M = apply_row_op(M, op, tol)
        ops.append(op)

    r = 0
    for col in range(limit):
        if r == m:
            break
        c = M.coords
        candidates = [i for i in range(r, m) if is_unit(from_coords(c[i, col]), tol)]
        if not candidates:
            skipped.append(col)
            continue
        p = max(candidates, key=lambda i: (_pivot_score(c[i, col]), -i))
        if p != r:
            do(RowOp("swap", (r, p)))
        pivot = M[r, col]
        if pivot.coords != ONE.coords:
            do(RowOp("scale", (r,), invert(pivot, tol)))
        for i in range(m):
            entry = M.coords[i, col]
            if i != r and np.any(entry != 0.0):
                do(RowOp("axpy", (i, r), scalar_mul(-1.0, from_coords(entry))))
        pivots.append(col)
        r += 1

    rest = M.coords[r:, :limit]
    achieved = bool(np.all(np.abs(rest) <= tol))
    return EliminationReport(M, tuple(ops), tuple(pivots), achieved, tuple(skipped))


# -- solving ---------------------------------------------------------------

def _is_identity_block(A: FuzzyMatrix, k: int, tol: float) -> bool:
    block = A.coords[:k, :k]
    return bool(np.all(np.abs(block - FuzzyMatrix.identity(k).coords) <= tol))


def ffls_rref_solve(A: FuzzyMatrix, b: FuzzyVector, tol: float = DEFAULT_TOL) -> SolutionSet:
    """Solution set of ``(I_m | B) x = b``.

    Particular solution ``(b, 0, ..., 0)``; for free slot ``m + i`` and each
    basis element ``e_j``, the direction holds ``e_j`` there and
    ``-B[k, i] e_j`` (ring product) in pivot slot ``k``.
    """
    m, n = A.shape
    if len(b) != m:
        raise DimensionMismatch(f"A has {m} rows but b has length {len(b)}")
    if m > n or not _is_identity_block(A, m, tol):
        raise NotRref("left block of the coefficient matrix is not the fuzzy identity")
    part = np.zeros((n, 5))
    part[:m] = b.coords
    basis = []
    for free in range(m, n):
        for e in BASIS:
            c = np.zeros((n, 5))
            c[free] = e.coords
            for k in range(m):
                c[k] = scalar_mul(-1.0, mul(A[k, free], e)).coords
            basis.append(FuzzyVector(c))
    status = "unique" if n == m else "affine"
    return SolutionSet(status, FuzzyVector(part), tuple(basis), m)


@dataclass(frozen=True)
class CoordinateSolveReport:
    coordinates: tuple[RealSolve, ...]
    solution: SolutionSet

    @property
    def ranks(self) -> tuple[int, ...]:
        return tuple(s.rank for s in self.coordinates)

    @property
    def consistent(self) -> bool:
        return all(s.consistent for s in self.coordinates)

    @property
    def total_dimension(self) -> int:
        return self.solution.dimension


def ffls_coordinate_solve(A: FuzzyMatrix, b: FuzzyVector, tol: float = DEFAULT_TOL) -> CoordinateSolveReport:
    """Solve coordinate c of ``A x = b`` as the real system ``A^(c) v = b^(c)``, c = 1..5."""
    m, n = A.shape
    if len(b) != m:
        raise DimensionMismatch(f"A has {m} rows but b has length {len(b)}")
    per = tuple(real_affine_solve(A.coordinate(c), b.coords[:, c], tol) for c in range(5))
    ranks = tuple(s.rank for s in per)
    diag = {"method": "coordinate", "augmented_ranks": [s.augmented_rank for s in per]}
    if not all(s.consistent for s in per):
        return CoordinateSolveReport(per, SolutionSet("inconsistent", None, (), ranks, diag))
    part = np.zeros((n, 5))
    basis = []
    for c, s in enumerate(per):
        part[:, c] = s.particular[:, 0]
        for v in s.null_vectors:
            d = np.zeros((n, 5))
            d[:, c] = v
            basis.append(FuzzyVector(d))
    status = "affine" if basis else "unique"
    sol = SolutionSet(status, FuzzyVector(part), tuple(basis), ranks, diag)
    return CoordinateSolveReport(per, sol)


Method = Literal["fuzzy-gauss", "coordinate"]


def ffls_solve(A: FuzzyMatrix, b: FuzzyVector, method: Method = "coordinate",
               tol: float = DEFAULT_TOL) -> SolutionSet:
    m, n = A.shape
    if len(b) != m:
        raise DimensionMismatch(f"A has {m} rows but b has length {len(b)}")
    if method == "coordinate":
        return ffls_coordinate_solve(A, b, tol).solution
    if method != "fuzzy-gauss":
        raise ValueError(f"unknown FFLS method {method!r}")

    rep = fuzzy_gauss_eliminate(A.augment(b), pivot_limit=n, tol=tol)
    diag = {"method": "fuzzy-gauss", "row_ops": len(rep.ops),
            "pivot_columns": list(rep.pivot_columns),
            "skipped_columns": list(rep.skipped_columns),
            "achieved_rref": rep.achieved_rref}
    if not rep.achieved_rref:
        sol = ffls_coordinate_solve(A, b, tol).solution
        diag["fallback"] = "no unit pivot for a full fuzzy RREF; used the coordinate solver"
        return SolutionSet(sol.status, sol.particular, sol.basis, sol.rank,
                           {**sol.diagnostics, **diag})

    r = len(rep.pivot_columns)
    out = rep.result.coords
    if np.any(np.abs(out[r:, n]) > tol):
        return SolutionSet("inconsistent", None, (), r, diag)
    free = [j for j in range(n) if j not in rep.pivot_columns]
    perm = list(rep.pivot_columns) + free
    reduced = FuzzyMatrix(out[:r][:, perm])
    sol = ffls_rref_solve(reduced, FuzzyVector(out[:r, n]), tol)

    def unpermute(v: FuzzyVector) -> FuzzyVector:
        c = np.zeros((n, 5))
        c[perm] = v.coords
        return FuzzyVector(c)

    return SolutionSet(sol.status, unpermute(sol.particular),
                       tuple(unpermute(v) for v in sol.basis), r, diag)


def v_matrix_reduce(A: FuzzyMatrix, tol: float = DEFAULT_TOL) -> np.ndarray:
    """The crisp matrix (a_ij) with A[i, j] = v_embed(a_ij)."""
    m, n = A.shape
    out = np.zeros((m, n))
    for i in range(m):
        for j in range(n):
            e = A[i, j]
            if not v_member(e, tol):
                raise NotInV(f"entry ({i}, {j}) = {e!r} is not in V")
            out[i, j] = e.x
    return out
