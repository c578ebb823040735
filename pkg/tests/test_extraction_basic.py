import pytest
from hypothesis import given

from conftest import graphs
from vminor.canon import is_isomorphic
from vminor.extraction import (
    ExtractionError, connected_reduce, cycle_shorten, ladder_to_fan, shorten_to,
)
from vminor.generators import complete, cycle, fan, path, star
from vminor.graph import Graph, apply_trace, is_connected
from vminor.search import Kind, verify_witness


def test_reduce_star_to_leaves():
    h = star(4)
    g = apply_trace(h, connected_reduce(h, range(4)))
    assert is_isomorphic(g, complete(4))


def test_reduce_path_middle():
    ops = connected_reduce(path(3), [0, 2])
    assert [op.kind for op in ops] == ["lc", "del"]
    assert apply_trace(path(3), ops).has_edge(0, 2)


def test_reduce_keep_everything():
    assert connected_reduce(cycle(5), range(5)) == ()


@given(graphs(min_n=1, max_n=9, connected=True))
def test_reduce_stays_connected(g):
    keep = g.labels[::2]
    out = apply_trace(g, connected_reduce(g, keep))
    assert set(out.labels) == set(keep) and is_connected(out)


def test_reduce_needs_connected():
    with pytest.raises(ExtractionError):
        connected_reduce(Graph.empty(2), [0])


@pytest.mark.parametrize("k", range(2, 8))
def test_ladder_to_fan(k):
    g, trace = ladder_to_fan(k)
    assert is_isomorphic(apply_trace(g, trace), fan(k))


def test_cycle_shorten():
    cert = cycle_shorten(cycle(7))
    assert verify_witness(cert) and cert.kind is Kind.PIVOT
    assert is_isomorphic(cert.result(), cycle(5))
    assert is_isomorphic(shorten_to(cycle(5), 3).result(), cycle(3))
    with pytest.raises(ExtractionError):
        cycle_shorten(cycle(4))
    with pytest.raises(ExtractionError):
        shorten_to(cycle(8), 5)
