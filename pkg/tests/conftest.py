import numpy as np
import pytest
from hypothesis import strategies as st

from bicliff.bicomplex import Bicomplex
from bicliff.matrix import BicMatrix

small = st.integers(min_value=-6, max_value=6)
fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def bicomplexes(draw, coeff=fractions):
    return Bicomplex(*(draw(coeff) for _ in range(4)))


@st.composite
def bic_matrices(draw, dim=2):
    flat = draw(st.lists(small, min_size=4 * dim * dim, max_size=4 * dim * dim))
    den = draw(st.integers(min_value=1, max_value=4))
    return BicMatrix(np.array(flat, dtype=np.int64).reshape(4, dim, dim), den)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
