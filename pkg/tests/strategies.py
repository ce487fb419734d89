"""Shared hypothesis strategies."""
from hypothesis import strategies as st

from torelli import symplectic
from torelli.quadratic import SpQuadraticForm

small = st.integers(-4, 4)
vectors = st.lists(small, min_size=6, max_size=6).map(tuple)
seeds = st.integers(0, 2**32 - 1)


@st.composite
def sp_matrices(draw, max_length=8):
    return symplectic.random_sp_element(draw(seeds), draw(st.integers(0, max_length)))


@st.composite
def forms(draw, g=3):
    return SpQuadraticForm(tuple(draw(st.lists(st.integers(0, 1), min_size=2 * g, max_size=2 * g))))


@st.composite
def integer_matrices(draw, rows, cols, bound=5):
    return tuple(tuple(draw(st.lists(st.integers(-bound, bound), min_size=cols, max_size=cols)))
                 for _ in range(rows))
