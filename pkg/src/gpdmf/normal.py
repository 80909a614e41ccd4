"""Standard normal CDF and quantile."""

import math

from .errors import BadOrdinate

_SQRT2 = math.sqrt(2.0)
_INV_SQRT_2PI = 1.0 / math.sqrt(2.0 * math.pi)

# Acklam's rational approximation, relative error ~1.15e-9 before refinement.
_A = (-3.969683028665376e01, 2.209460984245205e02, -2.759285104469687e02,
      1.383577518672690e02, -3.066479806614716e01, 2.506628277459239e00)
_B = (-5.447609879822406e01, 1.615858368580409e02, -1.556989798598866e02,
      6.680131188771972e01, -1.328068155288572e01)
_C = (-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e00,
      -2.549732539343734e00, 4.374664141464968e00, 2.938163982698783e00)
_D = (7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e00,
      3.754408661907416e00)
_P_LOW = 0.02425


def std_normal_cdf(t: float) -> float:
    """Phi(t), computed through erfc so both tails keep full relative precision."""
    if t == math.inf:
        return 1.0
    if t == -math.inf:
        return 0.0
    return 0.5 * math.erfc(-t / _SQRT2)


def std_normal_pdf(t: float) -> float:
    return _INV_SQRT_2PI * math.exp(-0.5 * t * t)


def _acklam_lower(p: float) -> float:
    # valid for 0 < p <= 0.5
    if p < _P_LOW:
        q = math.sqrt(-2.0 * math.log(p))
        num = ((((_C[0] * q + _C[1]) * q + _C[2]) * q + _C[3]) * q + _C[4]) * q + _C[5]
        den = (((_D[0] * q + _D[1]) * q + _D[2]) * q + _D[3]) * q + 1.0
        return num / den
    q = p - 0.5
    r = q * q
    num = (((((_A[0] * r + _A[1]) * r + _A[2]) * r + _A[3]) * r + _A[4]) * r + _A[5]) * q
    den = ((((_B[0] * r + _B[1]) * r + _B[2]) * r + _B[3]) * r + _B[4]) * r + 1.0
    return num / den


def std_normal_quantile(p: float) -> float:
    """Inverse of :func:`std_normal_cdf` on the open interval (0, 1).

    A rational approximation is refined by one Newton step. For p > 0.5 the
    work is done on the mirrored lower-tail problem, which avoids cancellation
    in ``1 - Phi(x)``.
    """
    if not (0.0 < p < 1.0) or math.isnan(p):
        raise BadOrdinate(f"quantile needs 0 < p < 1, got {p!r}")
    if p > 0.5:
        return -_lower_quantile(1.0 - p)
    return _lower_quantile(p)


def _lower_quantile(p: float) -> float:
    x = _acklam_lower(p)
    err = 0.5 * math.erfc(-x / _SQRT2) - p
    return x - err / std_normal_pdf(x)
