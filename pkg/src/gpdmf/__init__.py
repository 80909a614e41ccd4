"""Gaussian-PDMF fuzzy numbers and solvers for semi- and fully-fuzzy linear systems."""

from .errors import (
    BadIndex, BadOrdinate, BadShape, DimensionMismatch, FuzzyError, NonFinite,
    NonPositiveRadius, NotAUnit, NotInV, NotRref, OutOfBranch, ParseError,
    SingularMatrix, ZeroElement,
)
from .ffls import (
    CoordinateSolveReport, EliminationReport, FuzzyMatrix, RowOp, apply_row_op,
    ffls_coordinate_solve, ffls_rref_solve, ffls_solve, fuzzy_gauss_eliminate,
    fuzzy_mat_vec, fuzzy_matmul, fuzzy_residual, replay, v_matrix_reduce,
)
from .membership import (
    ControlPoint, default_control_points, membership_eval, membership_sample,
    mu_from_control_point, trapezoid_to_pdmf,
)
from .normal import std_normal_cdf, std_normal_quantile
from .number import (
    BASIS, DEFAULT_TOL, E1, E2, E3, E4, E5, ONE, ZERO, FuzzyNumber, add,
    from_coords, invert, is_unit, linear_combination, make, mul, scalar_mul,
    sub, to_coords, v_embed, v_invert, v_member, v_value,
)
from .sfls import (
    cramer_solve, mat_vec_apply, nullspace_basis, real_rref, residual,
    sfls_classify, sfls_solve, solve_dual,
)
from .vector import FuzzyVector, SolutionSet

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
