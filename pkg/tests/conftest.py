import pytest
from hypothesis import strategies as st

from simplicia import DirectedGraph

# Canonical fixtures used throughout the suite.
FIXTURE_EDGES = {
    "g1": (3, [(0, 1), (0, 2), (1, 2)]),  # one directed 2-simplex
    "g2": (3, [(0, 1), (1, 2), (2, 0)]),  # 3-cycle, nothing above dimension 1
    "g3": (3, [(0, 1), (0, 2)]),  # single open divergent constellation
    "g4": (6, [(0, 1), (0, 2), (1, 2), (1, 3), (3, 2), (3, 4), (3, 5), (4, 1)]),
    "g5": (4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]),
    "g6": (3, [(0, 1), (0, 2), (1, 2), (2, 1)]),  # reciprocal pair, two 2-simplices
}


def make_fixture(name: str) -> DirectedGraph:
    n, edges = FIXTURE_EDGES[name]
    return DirectedGraph(n, edges)


@pytest.fixture
def g1():
    return make_fixture("g1")


@pytest.fixture
def g2():
    return make_fixture("g2")


@pytest.fixture
def g3():
    return make_fixture("g3")


@pytest.fixture
def g4():
    return make_fixture("g4")


@pytest.fixture
def g5():
    return make_fixture("g5")


@pytest.fixture
def g6():
    return make_fixture("g6")


@pytest.fixture
def all_fixtures():
    return {name: make_fixture(name) for name in FIXTURE_EDGES}


@st.composite
def small_digraphs(draw, max_n: int = 8):
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return DirectedGraph(n, [p for p, keep in zip(pairs, mask) if keep])


def census_tuples(counts):
    return [
        (r.dimension, r.simplices, r.almost, r.completed, r.rejected_pairs)
        for r in counts.rows
    ]
