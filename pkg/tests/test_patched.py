import pytest

from vminor.extraction import (
    ExtractionError, HighDegree, Matching, PatchedPath, find_patched_path, induced_matching_from_path,
    patched_to_matching, random_patched_host, simplify_patched_path,
)
from vminor.extraction.patched import check_patched, geometric_sum
from vminor.graph import Graph
from vminor.search import verify_witness


def comb(n):
    """Path ``0..n-1`` with a private neighbour ``n+i`` on each vertex."""
    e = [(i, i + 1) for i in range(n - 1)] + [(i, n + i) for i in range(n)]
    return Graph.from_edges(e, range(2 * n)), list(range(n, 2 * n)), list(range(n))


def _literal_matching(m: Matching):
    h = m.certificate.result()
    return all(h.has_edge(s, q) == (i == j) for i, s in enumerate(m.S) for j, q in enumerate(m.T))


def test_geometric_sum():
    assert geometric_sum(3, 2) == 1 + 2 + 4
    assert geometric_sum(3, -1) == 0


def test_private_neighbours():
    g, S, T = comb(6)
    c = find_patched_path(g, S, T, 6, 3)
    assert c.b == tuple(range(6)) and c.S == tuple(S)


def test_high_degree():
    g, S, T = comb(8)
    g = Graph.from_edges(g.edges() + [(20, q) for q in (2, 3, 4, 5)], g.labels)
    out = find_patched_path(g, [*S, 20], T, 4, 4)
    assert isinstance(out, HighDegree) and out.vertex == 20 and len(out.neighbors) == 4


def test_needs_cover():
    g, S, T = comb(4)
    with pytest.raises(ExtractionError):
        find_patched_path(g, S[:-1], T, 2, 3)


def test_simple_input_is_kept():
    g, S, T = comb(6)
    c = find_patched_path(g, S, T, 6, 3)
    s = simplify_patched_path(c, 3, 4)
    assert s.simple and s.S == c.S[2:] and s.b == c.b[2:] and s.T == c.T
    check_patched(s)


def test_simplify_too_short():
    g, S, T = comb(3)
    c = find_patched_path(g, S, T, 3, 3)
    with pytest.raises(ExtractionError):
        simplify_patched_path(c, 3, 4)


def test_matching_single_neighbours():
    g, S, T = comb(6)
    c = simplify_patched_path(find_patched_path(g, S, T, 6, 3), 3, 6)
    m = patched_to_matching(c)
    assert len(m.S) == 3 and _literal_matching(m)
    assert {op.kind for op in m.certificate.trace} <= {"del", "sm"}


def test_matching_pivot_branch():
    # s_2 = 11 sees three consecutive path vertices 2, 3, 4
    e = [(i, i + 1) for i in range(5)] + [(10, 0), (11, 2), (11, 3), (11, 4)]
    g = Graph.from_edges(e, range(6))
    c = PatchedPath(g, (10, 11), (0, 1, 2, 3, 4), (0, 4), simple=True)
    m = patched_to_matching(c, scope=[10, 11, 0, 1, 2, 3, 4, 5])
    assert any(op.kind == "pv" for op in m.certificate.trace)
    assert m.S == (11,) and _literal_matching(m)


def test_matching_lc_branch():
    e = [(i, i + 1) for i in range(4)] + [(10, 0), (11, 2), (11, 3)]
    g = Graph.from_edges(e, range(5))
    c = PatchedPath(g, (10, 11), (0, 1, 2, 3), (0, 3), simple=True)
    m = patched_to_matching(c, scope=[10, 11, 0, 1, 2, 3, 4])
    assert any(op.kind == "lc" for op in m.certificate.trace) and _literal_matching(m)


def test_matching_minimal():
    g, S, T = comb(2)
    c = simplify_patched_path(find_patched_path(g, S, T, 2, 3), 3, 2)
    m = patched_to_matching(c)
    assert len(m.S) == 1 and _literal_matching(m)


def test_matching_needs_simple():
    g, S, T = comb(4)
    with pytest.raises(ExtractionError):
        patched_to_matching(find_patched_path(g, S, T, 4, 3))


@pytest.mark.parametrize("seed", range(40))
@pytest.mark.parametrize("k", [3, 4])
def test_pipeline_on_random_hosts(seed, k):
    g, S, T = random_patched_host(50, k, seed)
    for ell in (1, 2, 3):
        res = induced_matching_from_path(g, S, T, ell, k)
        if isinstance(res, HighDegree):
            assert sum(g.has_edge(res.vertex, q) for q in T) >= k
            continue
        assert res is not None and len(res.S) == ell
        assert verify_witness(res.certificate) and _literal_matching(res)
        tset = set(T)
        assert all(op.kind == "del" or set(op.args) <= tset for op in res.certificate.trace)
