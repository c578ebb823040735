import itertools

import pytest
from hypothesis import given

from conftest import graphs
from vminor.claims import parity_table
from vminor.generators import cycle, fan, ladder, one_subdivision, path, random_tree
from vminor.graph import DEL, LC, PV, Graph
from vminor.oracles import all_graphs, brute_is_minor
from vminor.search import (
    Kind, WitnessCertificate, clear_memo, is_pivot_minor, is_vertex_minor, memo_info, verify_witness,
)

SMALL = [g for n in range(0, 6) for g in all_graphs(n)]


def _cases(max_host):
    for h in SMALL:
        if h.order > max_host:
            continue
        for p in SMALL:
            if p.order <= h.order:
                yield p, h


@pytest.mark.parametrize("kind", [Kind.VERTEX, Kind.PIVOT])
def test_agrees_with_brute_force_small(kind):
    search = is_pivot_minor if kind is Kind.PIVOT else is_vertex_minor
    for p, h in _cases(4):
        cert = search(p, h)
        assert (cert is not None) == brute_is_minor(p, h, kind is Kind.PIVOT), (p, h)
        if cert is not None:
            assert verify_witness(cert)


@pytest.mark.slow
@pytest.mark.parametrize("kind", [Kind.VERTEX, Kind.PIVOT])
def test_agrees_with_brute_force_five_vertices(kind):
    search = is_pivot_minor if kind is Kind.PIVOT else is_vertex_minor
    bad = [(p, h) for p, h in _cases(5)
           if (search(p, h) is not None) != brute_is_minor(p, h, kind is Kind.PIVOT)]
    assert not bad


def test_misses_none_of_the_vertex_choices():
    # deleting the lowest label first would keep an edge; 2K_1 needs the other end
    host = Graph.from_edges([(1, 2)], range(3))
    assert is_pivot_minor(Graph.empty(2), host) is not None


def test_fan2_is_c3_with_empty_trace():
    cert = is_vertex_minor(fan(2), cycle(3))
    assert cert.trace == () and verify_witness(cert)


def test_pivot_minor_is_vertex_minor():
    for p, h in itertools.islice(_cases(5), 0, None, 7):
        if is_pivot_minor(p, h) is not None:
            assert is_vertex_minor(p, h) is not None


def test_f3_hides_in_p4():
    # F_3 *v at an end of its path is C_4, and C_4 pivots to P_4
    cert = is_vertex_minor(fan(3), path(4))
    assert cert is not None and verify_witness(cert)


def test_trees_have_no_f4():
    # F_4 is the gem, which is not distance-hereditary, unlike every tree
    for s in range(3):
        assert is_vertex_minor(fan(4), random_tree(7, s)) is None


def test_subdivided_ladder_holds_f3():
    cert = is_vertex_minor(fan(3), one_subdivision(ladder(3))[0])
    assert cert is not None and verify_witness(cert)


def test_corrected_parity_table():
    # C_4 pivots to P_4, which sits inside every longer cycle; so C_4 is a
    # pivot-minor of every C_k with k >= 5, odd ones included
    table = parity_table(10)
    for (l, k), found in table.items():
        expected = (k - l) % 2 == 0 or l == 4
        assert found == expected, (l, k)


@given(graphs(max_n=7))
def test_vertex_minor_of_itself(g):
    cert = is_vertex_minor(g, g)
    assert cert is not None and verify_witness(cert)


def test_verify_rejects_bad_certificates():
    good = is_pivot_minor(cycle(3), cycle(5))
    assert verify_witness(good)
    lc_in_pivot = WitnessCertificate(Kind.PIVOT, cycle(5), cycle(3), (LC(0),) + good.trace)
    assert not verify_witness(lc_in_pivot)
    wrong = WitnessCertificate(Kind.PIVOT, cycle(5), path(3), good.trace)
    assert not verify_witness(wrong)
    broken = WitnessCertificate(Kind.PIVOT, cycle(5), cycle(3), (PV(0, 2), DEL(0)))
    v = verify_witness(broken)
    assert not v and "replay failed" in v.reason


def test_memo_can_be_cleared():
    is_pivot_minor(cycle(3), cycle(5))
    assert memo_info()["decide"]["currsize"] > 0
    clear_memo()
    assert memo_info()["decide"]["currsize"] == 0
