import pytest
from hypothesis import given

from conftest import graphs
from vminor.generators import cycle, fan, path, random_graph
from vminor.graph import Op
from vminor.io import (
    FormatError, edge_list, format_certificate, format_trace, from_graph6, parse_certificate,
    parse_edge_list, parse_trace, to_graph6,
)
from vminor.search import is_pivot_minor


def test_known_strings():
    assert to_graph6(cycle(5)) == "Dhc"
    assert to_graph6(fan(2)) == "Bw"
    assert to_graph6(path(4)) == "Ch"
    assert from_graph6(">>graph6<<Dhc") == cycle(5)


@given(graphs(max_n=14))
def test_round_trip(g):
    s = to_graph6(g)
    assert from_graph6(s) == g and to_graph6(from_graph6(s)) == s


def test_large_order_header():
    g = random_graph(70, 0.1, 3)
    s = to_graph6(g)
    assert s[0] == "~" and from_graph6(s) == g


@pytest.mark.parametrize("text, offset", [("D!c", 1), ("Dh", 2), ("", 0), ("Dhd", 2)])
def test_errors_report_offset(text, offset):
    with pytest.raises(FormatError) as e:
        from_graph6(text)
    assert e.value.offset == offset


def test_trace_round_trip():
    ops = (Op("pv", (0, 1)), Op("del", (0,)), Op("lc", (4,)), Op("sm", (2,)))
    assert parse_trace(format_trace(ops)) == ops
    assert parse_trace("# comment\nPV 0 1  # inline\n\ndel 0\n") == ops[:2]


@pytest.mark.parametrize("text", ["zz 1", "pv 1", "lc x", "del -1"])
def test_trace_errors_name_the_line(text):
    with pytest.raises(FormatError, match="line 1"):
        parse_trace(text)


def test_certificate_round_trip():
    cert = is_pivot_minor(cycle(3), cycle(7))
    back = parse_certificate(format_certificate(cert))
    assert back.kind == cert.kind and back.trace == cert.trace
    assert back.host == cert.host


@given(graphs())
def test_edge_list_round_trip(g):
    assert parse_edge_list(edge_list(g)) == g
