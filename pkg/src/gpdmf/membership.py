"""Membership-function evaluation and calibration from control points."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .errors import BadOrdinate, BadShape, OutOfBranch
from .normal import std_normal_cdf, std_normal_quantile
from .number import FuzzyNumber, make

Side = Literal["left", "right"]

# tan is evaluated on at most pi/2 - _EDGE so the branch endpoints saturate
_EDGE = 1e-12
_HALF_PI = 0.5 * math.pi


@dataclass(frozen=True)
class ControlPoint:
    abscissa: float
    ordinate: float

    def __post_init__(self):
        if not (0.0 < self.ordinate < 1.0):
            raise BadOrdinate(f"control ordinate must lie in (0, 1), got {self.ordinate}")


def _branch_angle(offset: float, d: float) -> float:
    # offset in [0, d] runs from the support edge to the core
    theta = (math.pi / d) * offset - _HALF_PI
    return min(max(theta, -_HALF_PI + _EDGE), _HALF_PI - _EDGE)


def membership_eval(a: FuzzyNumber, t: float) -> float:
    x, dm, dp = a.x, a.d_minus, a.d_plus
    if t == x:
        return 1.0
    if t <= x - dm or t >= x + dp:
        return 0.0
    if t < x:
        z = math.tan(_branch_angle(t - x + dm, dm)) - a.mu_minus
    else:
        z = math.tan(_branch_angle(x + dp - t, dp)) - a.mu_plus
    return std_normal_cdf(z)


def membership_sample(a: FuzzyNumber, n: int) -> list[tuple[float, float]]:
    """``n`` evenly spaced samples over the support padded by 10% of its width."""
    if n < 2:
        raise ValueError("need at least two samples")
    pad = 0.1 * (a.d_minus + a.d_plus)
    ts = np.linspace(a.x - a.d_minus - pad, a.x + a.d_plus + pad, n)
    return [(float(t), membership_eval(a, float(t))) for t in ts]


def mu_from_control_point(x0: float, d: float, side: Side, p: ControlPoint) -> float:
    """Shape parameter that makes the ``side`` branch pass through ``p``."""
    if d <= 0:
        raise BadShape(f"radius must be positive, got {d}")
    if not (0.0 < p.ordinate < 1.0):
        raise BadOrdinate(f"control ordinate must lie in (0, 1), got {p.ordinate}")
    t = p.abscissa
    if side == "left":
        if not (x0 - d < t < x0):
            raise OutOfBranch(f"{t} is not inside the left branch ({x0 - d}, {x0})")
        offset = t - x0 + d
    elif side == "right":
        if not (x0 < t < x0 + d):
            raise OutOfBranch(f"{t} is not inside the right branch ({x0}, {x0 + d})")
        offset = x0 + d - t
    else:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    return math.tan((math.pi / d) * offset - _HALF_PI) - std_normal_quantile(p.ordinate)


def default_control_points(a1: float, b1: float, c1: float, d1: float) -> tuple[ControlPoint, ControlPoint]:
    """Quarter-plateau points at degree 0.99; branch midpoints at 0.5 when b1 == c1.

    A triangle has no plateau to take quarters of, and the midpoint choice
    reproduces the plain triangle shape (mu = 0).
    """
    if b1 == c1:
        x0 = b1
        return ControlPoint(0.5 * (a1 + x0), 0.5), ControlPoint(0.5 * (x0 + d1), 0.5)
    quarter = (c1 - b1) / 4.0
    return ControlPoint(b1 + quarter, 0.99), ControlPoint(c1 - quarter, 0.99)


def trapezoid_to_pdmf(
    a1: float,
    b1: float,
    c1: float,
    d1: float,
    left_cp: ControlPoint | None = None,
    right_cp: ControlPoint | None = None,
) -> FuzzyNumber:
    """Convert the trapezoid ``(a1, b1, c1, d1)`` to a Gaussian-PDMF.

    The core is the plateau midpoint and the support is kept. Missing control
    points come from :func:`default_control_points`.
    """
    if not (a1 < b1 <= c1 < d1):
        raise BadShape(f"trapezoid needs a1 < b1 <= c1 < d1, got {(a1, b1, c1, d1)}")
    x0 = 0.5 * (b1 + c1)
    dm, dp = x0 - a1, d1 - x0
    dl, dr = default_control_points(a1, b1, c1, d1)
    left_cp = left_cp or dl
    right_cp = right_cp or dr
    mu_minus = mu_from_control_point(x0, dm, "left", left_cp)
    mu_plus = mu_from_control_point(x0, dp, "right", right_cp)
    return make(x0, dm, dp, mu_minus, mu_plus)
