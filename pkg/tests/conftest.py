import pytest
from hypothesis import settings, strategies as st

from vminor.graph import Graph

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=0, max_n=9, connected=False):
    """Graphs on labels ``0..n-1`` (connected ones get a random spanning tree)."""
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = {p for p, b in zip(pairs, draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))) if b}
    if connected:
        for v in range(1, n):
            u = draw(st.integers(0, v - 1))
            edges.add((u, v))
    return Graph.from_edges(sorted(edges), range(n))


@st.composite
def graph_with_edge(draw, max_n=9):
    g = draw(graphs(min_n=2, max_n=max_n))
    e = g.edges()
    if not e:
        g = Graph.from_edges([(0, 1), *e], g.labels)
        e = g.edges()
    return g, draw(st.sampled_from(e))


@pytest.fixture
def c5():
    from vminor.generators import cycle

    return cycle(5)
