import pytest

from vminor.canon import is_isomorphic
from vminor.claims import cycle_gadget, fan_gadget
from vminor.extraction import Budget, ExtractionError, pipeline_cycle, pipeline_fan, shortest_odd_cycle
from vminor.generators import (
    cycle, fan, petersen, random_bipartite_connected, random_connected, random_tree,
)
from vminor.graph import Graph, induced_subgraph
from vminor.search import is_pivot_minor, verify_witness


def test_fan_itself():
    out = pipeline_fan(fan(4), 4)
    assert out and out.certificate.trace == ()


@pytest.mark.parametrize("r, k", [(6, 2), (8, 3)])
def test_fan_gadget(r, k):
    out = pipeline_fan(fan_gadget(r), k)
    assert out and verify_witness(out.certificate)
    assert is_isomorphic(out.certificate.pattern, fan(k))
    assert any("gadget" in n for n in out.notes)


@pytest.mark.parametrize("seed", range(20))
def test_trees_report_none(seed):
    out = pipeline_fan(random_tree(9, seed), 3)
    assert not out and out.notes


def test_cycle_gadget():
    out = pipeline_cycle(cycle_gadget(), 4)
    assert out and is_isomorphic(out.certificate.pattern, cycle(4))
    assert any("shrunk ancestor path" in n for n in out.notes)


@pytest.mark.parametrize("seed", range(20))
def test_bipartite_has_no_c3(seed):
    assert not pipeline_cycle(random_bipartite_connected(4, 5, 0.4, seed), 3)


def test_shortest_odd_cycle_is_induced():
    for s in range(20):
        g = random_connected(12, 0.2, s)
        c = shortest_odd_cycle(g)
        if c is None:
            continue
        assert len(c) % 2 and induced_subgraph(g, c).size == len(c)


def test_c3_from_petersen():
    out = pipeline_cycle(petersen(), 3)
    assert out and verify_witness(out.certificate)


@pytest.mark.parametrize("seed", range(15))
def test_answers_agree_with_search(seed):
    g = random_connected(8, 0.35, seed)
    for k in (4, 5):
        out = pipeline_cycle(g, k)
        if out:
            assert verify_witness(out.certificate)
            assert is_pivot_minor(cycle(k), g) is not None


def test_budget_and_errors():
    out = pipeline_fan(fan_gadget(8), 3, Budget(nodes=5, path_len=2))
    assert out.certificate is None or verify_witness(out.certificate)
    with pytest.raises(ExtractionError):
        pipeline_cycle(Graph.empty(2), 4)
    with pytest.raises(ExtractionError):
        pipeline_cycle(cycle(5), 2)
