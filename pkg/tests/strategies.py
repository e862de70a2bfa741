from hypothesis import strategies as st

from pconway.matrix import Matrix
from pconway.semiring import NAT
from pconway.series import SeriesSemiring

RING = SeriesSemiring(NAT, "xy", 4)

words = st.text(alphabet="xy", min_size=1, max_size=2)


@st.composite
def proper_series(draw, ring=RING):
    terms = draw(st.dictionaries(words, st.integers(1, 3), max_size=3))
    return ring.series(terms)


@st.composite
def series(draw, ring=RING):
    s = draw(proper_series(ring))
    return s + ring.inject(draw(st.integers(0, 3)))


@st.composite
def proper_matrices(draw, n=None, m=None, max_dim=3):
    n = draw(st.integers(0, max_dim)) if n is None else n
    m = n if m is None else m
    rows = [[draw(proper_series()) for _ in range(m)] for _ in range(n)]
    return Matrix.of(RING, rows, m)
