"""Semi-fuzzy linear systems: real matrix A, fuzzy unknowns and right-hand side.

Every statement about ``A x = b`` over X^n splits into five real systems, one
per coordinate column of the m x 5 block of b. The solvers here work on the
real augmented matrix ``(A | coordinate block of b)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionMismatch, NonFinite, SingularMatrix
from .number import DEFAULT_TOL, BASIS, add, scalar_mul, ZERO
from .vector import FuzzyVector, SolutionSet, coord_block


def as_real_matrix(A) -> np.ndarray:
    try:
        M = np.array(A, dtype=float)
    except (TypeError, ValueError) as exc:
        raise DimensionMismatch(f"matrix is not rectangular: {exc}") from None
    if M.ndim != 2:
        raise DimensionMismatch(f"expected a 2-d matrix, got {M.ndim} dimension(s)")
    if not np.all(np.isfinite(M)):
        raise NonFinite("matrix has non-finite entries")
    return M


def mat_vec_apply(A, x: FuzzyVector) -> FuzzyVector:
    """``A x`` with entry i equal to sum_k a_ik x_k (real scaling and fuzzy add)."""
    A = as_real_matrix(A)
    if A.shape[1] != len(x):
        raise DimensionMismatch(f"A has {A.shape[1]} columns but x has length {len(x)}")
    return FuzzyVector(A @ x.coords)


@dataclass(frozen=True)
class RowOpRecord:
    kind: str  # "swap" | "scale" | "axpy"
    rows: tuple[int, ...]
    scalar: float | None = None


@dataclass(frozen=True)
class RrefReport:
    rref: np.ndarray
    rank: int
    pivot_columns: tuple[int, ...]
    row_ops: tuple[RowOpRecord, ...] = field(default=(), repr=False)


def real_rref(M, tol: float = DEFAULT_TOL, pivot_limit: int | None = None,
              scale: float | None = None) -> RrefReport:
    """Gauss-Jordan elimination with partial pivoting.

    Entries with magnitude at most ``tol * scale`` count as zero, where
    ``scale`` defaults to the largest magnitude among the pivot-candidate
    columns. Only the first ``pivot_limit`` columns may hold pivots; the rest
    are carried along (an augmented block).
    """
    R = as_real_matrix(M).copy()
    m, n = R.shape
    limit = n if pivot_limit is None else pivot_limit
    if scale is None:
        scale = float(np.max(np.abs(R[:, :limit]))) if m and limit else 0.0
    thresh = tol * scale
    ops: list[RowOpRecord] = []
    pivots: list[int] = []
    r = 0
    for col in range(limit):
        if r == m:
            break
        p = r + int(np.argmax(np.abs(R[r:, col])))
        if abs(R[p, col]) <= thresh:
            continue
        if p != r:
            R[[r, p]] = R[[p, r]]
            ops.append(RowOpRecord("swap", (r, p)))
        inv = 1.0 / R[r, col]
        R[r] = R[r] / R[r, col]
        ops.append(RowOpRecord("scale", (r,), inv))
        for i in range(m):
            if i != r and R[i, col] != 0.0:
                f = R[i, col]
                R[i] = R[i] - f * R[r]
                ops.append(RowOpRecord("axpy", (i, r), -f))
        pivots.append(col)
        r += 1
    return RrefReport(R, len(pivots), tuple(pivots), tuple(ops))


def _check_system(A, b: FuzzyVector) -> np.ndarray:
    A = as_real_matrix(A)
    if A.shape[0] != len(b):
        raise DimensionMismatch(f"A has {A.shape[0]} rows but b has length {len(b)}")
    return A


@dataclass(frozen=True)
class Classification:
    status: str
    rank: int
    augmented_rank: int
    dimension: int


def _eliminate_augmented(A: np.ndarray, rhs: np.ndarray, tol: float):
    n = A.shape[1]
    aug = np.hstack([A, rhs])
    rep = real_rref(aug, tol, pivot_limit=n)
    aug_scale = float(np.max(np.abs(aug))) if aug.size else 0.0
    leftover = rep.rref[rep.rank:, n:]
    extra = real_rref(leftover, tol, scale=aug_scale).rank if leftover.size else 0
    return rep, rep.rank + extra


@dataclass(frozen=True)
class RealSolve:
    """Solution of ``A X = R`` for a real right-hand block R (one column per system)."""

    rank: int
    augmented_rank: int
    particular: np.ndarray | None
    null_vectors: tuple[np.ndarray, ...]
    report: RrefReport = field(repr=False)

    @property
    def consistent(self) -> bool:
        return self.augmented_rank == self.rank


def real_affine_solve(A, rhs, tol: float = DEFAULT_TOL) -> RealSolve:
    A = as_real_matrix(A)
    rhs = np.asarray(rhs, dtype=float)
    if rhs.ndim == 1:
        rhs = rhs[:, None]
    if rhs.shape[0] != A.shape[0]:
        raise DimensionMismatch(f"A has {A.shape[0]} rows but the right-hand side has {rhs.shape[0]}")
    n = A.shape[1]
    rep, aug_rank = _eliminate_augmented(A, rhs, tol)
    nulls = tuple(_real_null_vectors(rep, n))
    if aug_rank > rep.rank:
        return RealSolve(rep.rank, aug_rank, None, nulls, rep)
    x = np.zeros((n, rhs.shape[1]))
    for row, p in enumerate(rep.pivot_columns):
        x[p] = rep.rref[row, n:]
    return RealSolve(rep.rank, aug_rank, x, nulls, rep)


def sfls_classify(A, b: FuzzyVector, tol: float = DEFAULT_TOL) -> Classification:
    """Consistency via R(A) against the rank of the m x (n+5) fuzzy augmented matrix."""
    A = _check_system(A, b)
    sol = real_affine_solve(A, coord_block(b), tol)
    return _classify(sol.rank, sol.augmented_rank, A.shape[1])


def _classify(rank: int, aug_rank: int, n: int) -> Classification:
    if aug_rank > rank:
        return Classification("inconsistent", rank, aug_rank, 0)
    if rank == n:
        return Classification("unique", rank, aug_rank, 0)
    return Classification("affine", rank, aug_rank, 5 * (n - rank))


def _real_null_vectors(rep: RrefReport, n: int) -> list[np.ndarray]:
    free = [c for c in range(n) if c not in rep.pivot_columns]
    out = []
    for f in free:
        v = np.zeros(n)
        v[f] = 1.0
        for row, p in enumerate(rep.pivot_columns):
            v[p] = -rep.rref[row, f]
        out.append(v)
    return out


def nullspace_basis(A, tol: float = DEFAULT_TOL) -> list[FuzzyVector]:
    """5 (n - R(A)) fuzzy vectors spanning Nul A over X^n.

    Each real null vector v becomes ``v e_1, ..., v e_5``; free columns are
    visited in increasing order, basis index fastest.
    """
    A = as_real_matrix(A)
    rep = real_rref(A, tol)
    return _fuzzy_null_basis(_real_null_vectors(rep, A.shape[1]))


def _fuzzy_null_basis(vectors) -> list[FuzzyVector]:
    out = []
    for v in vectors:
        for e in BASIS:
            out.append(FuzzyVector(np.outer(v, e.coords)))
    return out


def sfls_solve(A, b: FuzzyVector, tol: float = DEFAULT_TOL) -> SolutionSet:
    A = _check_system(A, b)
    n = A.shape[1]
    sol = real_affine_solve(A, coord_block(b), tol)
    cls = _classify(sol.rank, sol.augmented_rank, n)
    diag = {"augmented_rank": sol.augmented_rank,
            "pivot_columns": list(sol.report.pivot_columns),
            "row_ops": len(sol.report.row_ops)}
    if sol.particular is None:
        return SolutionSet("inconsistent", None, (), sol.rank, diag)
    basis = _fuzzy_null_basis(sol.null_vectors)
    return SolutionSet(cls.status, FuzzyVector(sol.particular), tuple(basis), sol.rank, diag)


def _det(M: np.ndarray) -> float:
    if M.shape[0] == 0:
        return 1.0
    return float(np.linalg.det(M))


def cramer_solve(A, b: FuzzyVector, tol: float = DEFAULT_TOL) -> FuzzyVector:
    """x_j = (det A)^-1 * sum_i (-1)^(i+j) det(A_ij) b_i, with LU determinants."""
    A = _check_system(A, b)
    n = A.shape[0]
    if A.shape[1] != n:
        raise DimensionMismatch(f"Cramer's rule needs a square matrix, got {A.shape}")
    det = _det(A)
    if abs(det) <= tol:
        raise SingularMatrix(f"|det A| = {abs(det):.3g} is not above {tol:g}")
    out = []
    for j in range(n):
        acc = ZERO
        for i in range(n):
            minor = np.delete(np.delete(A, i, axis=0), j, axis=1)
            cof = (-1.0) ** (i + j) * _det(minor)
            acc = add(acc, scalar_mul(cof, b[i]))
        out.append(scalar_mul(1.0 / det, acc))
    return FuzzyVector.of(out)


def solve_dual(A, Y: FuzzyVector, B, Z: FuzzyVector, tol: float = DEFAULT_TOL) -> SolutionSet:
    """Solve ``A x + Y = B x + Z`` as ``(A - B) x = Z - Y``."""
    A = as_real_matrix(A)
    B = as_real_matrix(B)
    if A.shape != B.shape:
        raise DimensionMismatch(f"A is {A.shape} but B is {B.shape}")
    if len(Y) != len(Z):
        raise DimensionMismatch(f"Y has length {len(Y)} but Z has length {len(Z)}")
    return sfls_solve(A - B, Z - Y, tol)


def residual(A, x: FuzzyVector, b: FuzzyVector) -> np.ndarray:
    """Coordinate array of ``A x - b``."""
    return (mat_vec_apply(A, x) - b).coords
