"""The Gaussian-PDMF number space and its ring / linear-space operations.

A fuzzy number ``<x; d-, d+, mu-, mu+>`` is stored through its coordinate
vector ``(x, ln d-, ln d+, mu-, mu+)``. In those coordinates addition and real
scaling are the usual vector operations and multiplication is componentwise,
so the space is the product ring R^5. The radii are only exponentiated when
someone asks for them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import NonFinite, NonPositiveRadius, NotAUnit, NotInV, ZeroElement

DEFAULT_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class FuzzyNumber:
    """Immutable Gaussian-PDMF element, held in coordinates.

    Build instances with :func:`make` (display parameters) or
    :func:`from_coords`; the raw constructor does not validate.
    Equality (``==``) is coordinatewise within ``DEFAULT_TOL``.
    """

    x: float
    log_d_minus: float
    log_d_plus: float
    mu_minus: float
    mu_plus: float

    __hash__ = None  # tolerance-based equality is not hash compatible

    @property
    def d_minus(self) -> float:
        return math.exp(self.log_d_minus)

    @property
    def d_plus(self) -> float:
        return math.exp(self.log_d_plus)

    @property
    def coords(self) -> tuple[float, float, float, float, float]:
        return (self.x, self.log_d_minus, self.log_d_plus, self.mu_minus, self.mu_plus)

    @property
    def params(self) -> tuple[float, float, float, float, float]:
        """Display parameters ``(x, d-, d+, mu-, mu+)``."""
        return (self.x, self.d_minus, self.d_plus, self.mu_minus, self.mu_plus)

    def isclose(self, other: FuzzyNumber, tol: float = DEFAULT_TOL) -> bool:
        return all(abs(a - b) <= tol for a, b in zip(self.coords, other.coords))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FuzzyNumber):
            return NotImplemented
        return self.isclose(other)

    def __add__(self, other: FuzzyNumber) -> FuzzyNumber:
        if not isinstance(other, FuzzyNumber):
            return NotImplemented
        return add(self, other)

    def __sub__(self, other: FuzzyNumber) -> FuzzyNumber:
        if not isinstance(other, FuzzyNumber):
            return NotImplemented
        return sub(self, other)

    def __neg__(self) -> FuzzyNumber:
        return scalar_mul(-1.0, self)

    def __mul__(self, other):
        if isinstance(other, FuzzyNumber):
            return mul(self, other)
        if isinstance(other, (int, float, np.integer, np.floating)):
            return scalar_mul(float(other), self)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float, np.integer, np.floating)):
            return scalar_mul(float(other), self)
        return NotImplemented

    def __repr__(self) -> str:
        x, dm, dp, mm, mp = self.params
        return f"<{x:.6g}; {dm:.6g}, {dp:.6g}, {mm:.6g}, {mp:.6g}>"


def _check_finite(values: Iterable[float]) -> None:
    for v in values:
        if not math.isfinite(v):
            raise NonFinite(f"non-finite value {v!r}")


def make(x: float, d_minus: float, d_plus: float, mu_minus: float, mu_plus: float) -> FuzzyNumber:
    """Validated constructor from display parameters."""
    vals = [float(v) for v in (x, d_minus, d_plus, mu_minus, mu_plus)]
    _check_finite(vals)
    if vals[1] <= 0 or vals[2] <= 0:
        raise NonPositiveRadius(f"support radii must be positive, got d-={d_minus}, d+={d_plus}")
    return FuzzyNumber(vals[0], math.log(vals[1]), math.log(vals[2]), vals[3], vals[4])


def to_coords(a: FuzzyNumber) -> np.ndarray:
    return np.array(a.coords, dtype=float)


def from_coords(c: Sequence[float]) -> FuzzyNumber:
    if len(c) != 5:
        raise ValueError(f"coordinate vector needs 5 entries, got {len(c)}")
    vals = [float(v) for v in c]
    _check_finite(vals)
    return FuzzyNumber(*vals)


def add(a: FuzzyNumber, b: FuzzyNumber) -> FuzzyNumber:
    return FuzzyNumber(*(p + q for p, q in zip(a.coords, b.coords)))


def sub(a: FuzzyNumber, b: FuzzyNumber) -> FuzzyNumber:
    return FuzzyNumber(*(p - q for p, q in zip(a.coords, b.coords)))


def scalar_mul(lam: float, a: FuzzyNumber) -> FuzzyNumber:
    # (d)**lam is exp(lam * ln d): scaling the log coordinate never underflows d to 0
    lam = float(lam)
    return FuzzyNumber(*(lam * p for p in a.coords))


def mul(a: FuzzyNumber, b: FuzzyNumber) -> FuzzyNumber:
    """Ring product; d1**ln(d2) is exp(ln d1 * ln d2), i.e. a coordinate product."""
    return FuzzyNumber(*(p * q for p, q in zip(a.coords, b.coords)))


def is_unit(a: FuzzyNumber, tol: float = DEFAULT_TOL) -> bool:
    """True iff every coordinate is farther than ``tol`` from zero (d = 1 is coordinate 0)."""
    return all(abs(c) > tol for c in a.coords)


def invert(a: FuzzyNumber, tol: float = DEFAULT_TOL) -> FuzzyNumber:
    if not is_unit(a, tol):
        raise NotAUnit(f"{a!r} has a coordinate within {tol:g} of zero")
    return FuzzyNumber(*(1.0 / c for c in a.coords))


def linear_combination(weights: Sequence[float], items: Sequence[FuzzyNumber]) -> FuzzyNumber:
    acc = ZERO
    for w, item in zip(weights, items, strict=True):
        acc = add(acc, scalar_mul(w, item))
    return acc


# -- subfield V = {<a; e^a, e^a, a, a>} ------------------------------------

def v_embed(a: float) -> FuzzyNumber:
    a = float(a)
    _check_finite([a])
    return FuzzyNumber(a, a, a, a, a)


def v_member(x: FuzzyNumber, tol: float = DEFAULT_TOL) -> bool:
    c = x.coords
    return all(abs(c[0] - ci) <= tol for ci in c[1:])


def v_value(x: FuzzyNumber, tol: float = DEFAULT_TOL) -> float:
    """The real ``a`` with ``x == v_embed(a)``."""
    if not v_member(x, tol):
        raise NotInV(f"{x!r} is not of the form <a; e^a, e^a, a, a>")
    return x.x


def v_invert(x: FuzzyNumber, tol: float = DEFAULT_TOL) -> FuzzyNumber:
    a = v_value(x, tol)
    if abs(a) <= tol:
        raise ZeroElement("the zero element of V has no inverse")
    # reciprocal coordinates; <1/a; e^(1/a), ...> is what makes x * x^-1 = 1
    return v_embed(1.0 / a)


ZERO = FuzzyNumber(0.0, 0.0, 0.0, 0.0, 0.0)
ONE = FuzzyNumber(1.0, 1.0, 1.0, 1.0, 1.0)
E1 = FuzzyNumber(1.0, 0.0, 0.0, 0.0, 0.0)
E2 = FuzzyNumber(0.0, 1.0, 0.0, 0.0, 0.0)
E3 = FuzzyNumber(0.0, 0.0, 1.0, 0.0, 0.0)
E4 = FuzzyNumber(0.0, 0.0, 0.0, 1.0, 0.0)
E5 = FuzzyNumber(0.0, 0.0, 0.0, 0.0, 1.0)
BASIS = (E1, E2, E3, E4, E5)
