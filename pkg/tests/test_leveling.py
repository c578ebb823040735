import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from conftest import graphs
from vminor.generators import complete, cycle, path, petersen, random_connected, star
from vminor.graph import Graph, GraphError, induced_subgraph, is_induced_path
from vminor.leveling import (
    ancestor_path, build_leveling, check_leveling, chromatic_number, clique_number,
    clique_or_independent, degree_or_path, dsatur, exact_coloring, find_induced_path,
    first_common_ancestor, is_ancestor, is_proper, level_parity_color, longest_induced_path,
    max_clique, max_independent_set, monotone_subsequence, parents,
)


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(g.labels)
    h.add_edges_from(g.edges())
    return h


@given(graphs(min_n=1, connected=True))
def test_leveling_is_bfs(g):
    lv = build_leveling(g, g.labels[0])
    assert check_leveling(g, lv)
    dist = nx.single_source_shortest_path_length(to_nx(g), g.labels[0])
    for i, level in enumerate(lv.levels):
        assert all(dist[v] == i for v in level)


def test_ancestors_on_a_cycle():
    g = cycle(6)
    lv = build_leveling(g, 0)
    assert parents(g, lv, 3) == [2, 4]
    assert is_ancestor(g, lv, 1, 3) and not is_ancestor(g, lv, 5, 2)
    assert first_common_ancestor(g, lv, 2, 4) == 0
    assert ancestor_path(g, lv, 0, 3) == [3, 2, 1, 0]


def test_clique_number_agrees_with_networkx():
    rng = random.Random(4)
    for _ in range(100):
        g = random_connected(rng.randint(1, 14), rng.random(), rng.randrange(10**6))
        omega = max(len(c) for c in nx.find_cliques(to_nx(g)))
        assert clique_number(g) == omega
        cl = max_clique(g)
        assert all(g.has_edge(a, b) for a, b in itertools.combinations(cl, 2))
        ind = max_independent_set(g)
        assert not any(g.has_edge(a, b) for a, b in itertools.combinations(ind, 2))


def _brute_chi(g):
    vs = g.labels
    for c in range(1, len(vs) + 1):
        for col in itertools.product(range(c), repeat=len(vs)):
            if is_proper(g, dict(zip(vs, col))):
                return c
    return 0


@given(graphs(max_n=7))
def test_chromatic_number_is_exact(g):
    col = exact_coloring(g)
    assert is_proper(g, col)
    assert chromatic_number(g) == len(set(col.values())) == _brute_chi(g)


def test_known_chromatic_numbers():
    assert chromatic_number(petersen()) == 3
    assert chromatic_number(cycle(7)) == 3
    assert chromatic_number(complete(6)) == 6
    assert is_proper(petersen(), dsatur(petersen()))


def test_level_parity_coloring():
    g = random_connected(20, 0.2, 9)
    lv = build_leveling(g, 0)
    per = [exact_coloring(induced_subgraph(g, level)) for level in lv.levels]
    col = level_parity_color(g, lv, per)
    assert is_proper(g, col)
    assert len(set(col.values())) <= 2 * max(len(set(c.values())) for c in per)


@given(st.lists(st.integers(0, 5), min_size=1, max_size=30))
def test_monotone_subsequence(seq):
    n = 1
    while n * n + 1 <= len(seq):
        n += 1
    n -= 1
    m = monotone_subsequence(seq, n)
    vals = [seq[i] for i in m.indices]
    assert m.indices == sorted(m.indices)
    if m.increasing:
        assert vals == sorted(vals)
    else:
        assert all(a > b for a, b in zip(vals, vals[1:]))
    assert len(m.indices) >= n + 1


def test_clique_or_independent():
    assert clique_or_independent(complete(5), 4, 4).tag == "clique"
    assert clique_or_independent(star(5), 3, 4).tag == "independent"
    assert clique_or_independent(cycle(5), 3, 3).tag == "neither"


def test_induced_paths():
    g = cycle(8)
    r = find_induced_path(g, 7)
    assert r.path and is_induced_path(g, r.path)
    assert find_induced_path(g, 8).path is None
    assert len(longest_induced_path(petersen()).path) == 5  # checked by brute force
    assert not find_induced_path(random_connected(30, 0.5, 1), 30, budget=10).complete


def test_degree_or_path():
    assert degree_or_path(star(4), 3, 4).tag == "degree"
    assert degree_or_path(path(6), 3, 5).tag == "path"
    assert degree_or_path(path(3), 3, 5).tag == "notfound"
    with pytest.raises(GraphError):
        degree_or_path(Graph.empty(2), 2, 2)


@pytest.mark.parametrize("seed", range(20))
def test_degree_or_path_above_threshold(seed):
    rng = random.Random(seed)
    k, ell = rng.choice([(2, 4), (3, 3), (3, 4)])
    g = random_connected(k ** (ell - 2) + 1, 0.1, seed)
    assert degree_or_path(g, k, ell).tag != "notfound"
