"""Fuzzy vectors and solution sets."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Literal, Sequence

import numpy as np

from .errors import DimensionMismatch
from .number import DEFAULT_TOL, FuzzyNumber, from_coords


class FuzzyVector:
    """Fixed-length sequence of fuzzy numbers backed by an (n, 5) coordinate array."""

    __slots__ = ("_c",)

    def __init__(self, coords):
        c = np.array(coords, dtype=float)
        if c.ndim != 2 or c.shape[1] != 5:
            raise ValueError(f"expected an (n, 5) coordinate array, got shape {c.shape}")
        c.setflags(write=False)
        self._c = c

    @classmethod
    def of(cls, numbers: Iterable[FuzzyNumber]) -> FuzzyVector:
        rows = [n.coords for n in numbers]
        return cls(np.array(rows, dtype=float).reshape(len(rows), 5))

    @classmethod
    def zeros(cls, n: int) -> FuzzyVector:
        return cls(np.zeros((n, 5)))

    @classmethod
    def unit(cls, n: int, slot: int, j: int) -> FuzzyVector:
        """Standard basis vector of X^n: basis element ``j`` (0-based) in ``slot``."""
        c = np.zeros((n, 5))
        c[slot, j] = 1.0
        return cls(c)

    @property
    def coords(self) -> np.ndarray:
        return self._c

    def __len__(self) -> int:
        return self._c.shape[0]

    def __getitem__(self, i: int) -> FuzzyNumber:
        return from_coords(self._c[i])

    def __iter__(self) -> Iterator[FuzzyNumber]:
        return (from_coords(row) for row in self._c)

    def isclose(self, other: FuzzyVector, tol: float = DEFAULT_TOL) -> bool:
        return self._c.shape == other._c.shape and bool(np.all(np.abs(self._c - other._c) <= tol))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FuzzyVector):
            return NotImplemented
        return self.isclose(other)

    __hash__ = None

    def _check(self, other: FuzzyVector) -> None:
        if len(self) != len(other):
            raise DimensionMismatch(f"vector lengths differ: {len(self)} vs {len(other)}")

    def __add__(self, other: FuzzyVector) -> FuzzyVector:
        self._check(other)
        return FuzzyVector(self._c + other._c)

    def __sub__(self, other: FuzzyVector) -> FuzzyVector:
        self._check(other)
        return FuzzyVector(self._c - other._c)

    def __neg__(self) -> FuzzyVector:
        return FuzzyVector(-self._c)

    def __rmul__(self, lam: float) -> FuzzyVector:
        return FuzzyVector(float(lam) * self._c)

    def __repr__(self) -> str:
        return "FuzzyVector(" + ", ".join(repr(n) for n in self) + ")"


def coord_block(b: FuzzyVector) -> np.ndarray:
    """The m x 5 real block whose row i is the coordinate vector of b_i."""
    return np.array(b.coords)


Status = Literal["unique", "affine", "inconsistent"]


@dataclass(frozen=True)
class SolutionSet:
    """``particular + sum c_k * basis[k]`` over real weights ``c_k``.

    ``rank`` is R(A) for real systems and the five per-coordinate ranks for
    the coordinate FFLS solver.
    """

    status: Status
    particular: FuzzyVector | None
    basis: tuple[FuzzyVector, ...] = ()
    rank: int | tuple[int, ...] = 0
    diagnostics: dict = field(default_factory=dict, compare=False)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def consistent(self) -> bool:
        return self.status != "inconsistent"

    def point(self, weights: Sequence[float]) -> FuzzyVector:
        """The member of the set with the given real weights."""
        if self.particular is None:
            raise ValueError("inconsistent system has no solutions")
        if len(weights) != len(self.basis):
            raise DimensionMismatch(f"need {len(self.basis)} weights, got {len(weights)}")
        c = np.array(self.particular.coords)
        for w, v in zip(weights, self.basis):
            c = c + float(w) * v.coords
        return FuzzyVector(c)

