import math
import sys

import numpy as np
import pytest
from hypothesis import strategies as st

from gpdmf import FuzzyNumber, FuzzyVector, from_coords

coord = st.floats(min_value=-5, max_value=5, allow_nan=False, allow_infinity=False)
coord_vec = st.lists(coord, min_size=5, max_size=5)


@st.composite
def fuzzy_numbers(draw):
    return from_coords(draw(coord_vec))


@st.composite
def units(draw):
    c = draw(st.lists(
        st.one_of(st.floats(0.1, 5), st.floats(-5, -0.1)), min_size=5, max_size=5))
    return from_coords(c)


def random_number(rng: np.random.Generator, lo=-5.0, hi=5.0) -> FuzzyNumber:
    return from_coords(rng.uniform(lo, hi, 5))


def random_vector(rng: np.random.Generator, n: int) -> FuzzyVector:
    return FuzzyVector(rng.uniform(-5, 5, (n, 5)))


def assert_coords_close(a, b, tol=1e-9):
    a = np.asarray(getattr(a, "coords", a), dtype=float)
    b = np.asarray(getattr(b, "coords", b), dtype=float)
    assert a.shape == b.shape
    assert np.max(np.abs(a - b), initial=0.0) <= tol, (a, b)


@pytest.fixture
def rng():
    return np.random.default_rng(20261014)


E = math.e


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULT_LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
