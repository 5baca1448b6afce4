from pathlib import Path

import pytest
from hypothesis import strategies as st

from treespec.graph import Graph, Orientation
from treespec.graph6 import read_graph6_file

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def connected_n6() -> list[Graph]:
    """All 143 connected graphs on 1..6 vertices, one per isomorphism class."""
    return read_graph6_file(DATA / "connected_n6.g6")


@pytest.fixture(scope="session")
def connected_e6() -> list[Graph]:
    """All 53 connected graphs with at most 6 edges."""
    return read_graph6_file(DATA / "connected_e6.g6")


@st.composite
def graphs(draw, min_order=1, max_order=8):
    n = draw(st.integers(min_order, max_order))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, tuple(p for p, keep in zip(pairs, mask) if keep))


@st.composite
def graphs_with_orientation(draw, min_order=2, max_order=8):
    g = draw(graphs(min_order, max_order).filter(lambda g: g.size > 0))
    flags = draw(st.lists(st.booleans(), min_size=g.size, max_size=g.size))
    return g, Orientation(tuple(flags))
