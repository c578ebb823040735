import pytest
from hypothesis import given, strategies as st

from conftest import graph_with_edge, graphs
from vminor.generators import cycle, path, star
from vminor.graph import (
    DEL, LC, PV, SM, Graph, GraphError, TraceBuilder, TraceError, apply_trace, compact,
    components, delete_vertex, induced_subgraph, is_bipartite, is_connected, is_induced_path,
    is_smoothable, local_complement, pivot, pivot_by_classes, relabel, smooth,
)


def test_lc_complements_the_neighbourhood():
    g = local_complement(star(3), 3)
    assert g.has_edge(0, 1) and g.has_edge(1, 2) and g.has_edge(0, 2)
    assert g.degree(3) == 3


def test_lc_on_triangle_gives_path():
    g = local_complement(cycle(3), 0)
    assert not g.has_edge(1, 2) and g.size == 2


def test_pivot_turns_c4_into_p4():
    # the only toggled pair is 3-2 (one neighbour of each end), so C_4 opens up
    g = pivot(cycle(4), 0, 1)
    assert g.size == 3 and not g.has_edge(2, 3)
    assert is_induced_path(g, [3, 1, 0, 2])
    assert pivot_by_classes(cycle(4), 0, 1) == g


def test_pivot_needs_an_edge():
    with pytest.raises(GraphError):
        pivot(path(3), 0, 2)


@given(graphs())
def test_lc_is_an_involution(g):
    for v in g.labels:
        assert local_complement(local_complement(g, v), v) == g


@given(graph_with_edge())
def test_pivot_identities(ge):
    g, (u, v) = ge
    assert pivot(pivot(g, u, v), u, v) == g
    lc = local_complement
    assert lc(lc(lc(g, u), v), u) == lc(lc(lc(g, v), u), v)
    assert pivot(g, u, v) == pivot_by_classes(g, u, v)


def test_smoothing():
    g = smooth(path(4), 1)
    assert g.labels == (0, 2, 3) and g.has_edge(0, 2)
    assert not is_smoothable(cycle(3), 0)
    with pytest.raises(GraphError):
        smooth(cycle(3), 0)


def test_delete_and_induced():
    g = delete_vertex(cycle(5), 2)
    assert is_induced_path(g, [3, 4, 0, 1])
    assert induced_subgraph(cycle(5), [0, 1, 2]).size == 2


def test_connectivity_helpers():
    g = Graph.from_edges([(0, 1), (2, 3)], range(5))
    assert not is_connected(g)
    assert sorted(map(sorted, components(g))) == [[0, 1], [2, 3], [4]]
    assert is_bipartite(cycle(6)) and not is_bipartite(cycle(5))


def test_relabel_and_compact():
    g = relabel(path(3), {0: 10, 1: 11, 2: 12})
    assert g.labels == (10, 11, 12)
    h, f = compact(g)
    assert h == path(3) and f == {10: 0, 11: 1, 12: 2}


def test_trace_builder_records():
    tb = TraceBuilder(cycle(5))
    tb.pv(0, 1)
    tb.delete(0, 1)
    assert tb.trace == (PV(0, 1), DEL(0), DEL(1))
    assert apply_trace(cycle(5), tb.trace) == tb.graph


def test_trace_error_reports_index():
    with pytest.raises(TraceError) as e:
        apply_trace(cycle(5), [LC(0), SM(7)])
    assert e.value.index == 1


@given(graphs(min_n=1), st.data())
def test_delete_commutes(g, data):
    a = data.draw(st.sampled_from(g.labels))
    b = data.draw(st.sampled_from(g.labels))
    if a != b:
        assert delete_vertex(delete_vertex(g, a), b) == delete_vertex(delete_vertex(g, b), a)
