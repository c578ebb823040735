"""Slow reference implementations used to cross-check the fast code.

Nothing here shares a cache with :mod:`vminor.search`.  Isomorphism classes
are keyed by a brute-force canonical form (lexicographically largest
adjacency over all vertex permutations), so the oracle does not even rely on
the refinement-based canonical labelling.
"""
from __future__ import annotations

from itertools import combinations, permutations
from typing import Iterator

from .canon import canonical_form, graph_from_key
from .graph import Graph, compact, delete_vertex, local_complement, pivot


def brute_canon(g: Graph) -> tuple:
    h, _ = compact(g)
    n = h.order
    best = None
    for perm in permutations(range(n)):
        pos = {v: i for i, v in enumerate(perm)}
        key = tuple(sorted((min(pos[u], pos[v]), max(pos[u], pos[v])) for u, v in h.edges()))
        if best is None or key > best:
            best = key
    return (n, best or ())


def _equivalence_class(g: Graph, pivots_only: bool) -> list[Graph]:
    seen = {brute_canon(g): g}
    todo = [g]
    while todo:
        h = todo.pop()
        if pivots_only:
            nxt = [pivot(h, u, v) for u, v in h.edges()]
        else:
            nxt = [local_complement(h, v) for v in h.labels]
        for x in nxt:
            k = brute_canon(x)
            if k not in seen:
                seen[k] = x
                todo.append(x)
    return list(seen.values())


def minor_closure(host: Graph, pivots_only: bool, min_order: int = 0) -> set:
    """Brute-force canonical forms of all vertex-minors (or pivot-minors) of
    ``host`` with at least ``min_order`` vertices.  Every equivalent graph is
    generated and every vertex deleted from each, no pruning, no memo."""
    out: set = set()
    layer = {brute_canon(host): host}
    while layer:
        nxt: dict = {}
        for g in layer.values():
            for h in _equivalence_class(g, pivots_only):
                out.add(brute_canon(h))
                if h.order > min_order:
                    for v in h.labels:
                        d = delete_vertex(h, v)
                        nxt.setdefault(brute_canon(d), d)
        layer = {k: g for k, g in nxt.items() if k not in out}
    return out


def brute_is_minor(pattern: Graph, host: Graph, pivots_only: bool) -> bool:
    if pattern.order > host.order:
        return False
    return brute_canon(pattern) in minor_closure(host, pivots_only, pattern.order)


# -- small-graph corpus -------------------------------------------------------------

def all_graphs(n: int, connected: bool = False) -> Iterator[Graph]:
    """One representative per isomorphism class on ``n`` vertices, built by
    vertex augmentation with all neighbourhood subsets."""
    for key in _classes(n):
        g = graph_from_key(key)
        if not connected or _connected(g):
            yield g


def _connected(g: Graph) -> bool:
    from .graph import is_connected
    return is_connected(g)


_CLASS_CACHE: dict[int, list] = {}


def _classes(n: int) -> list:
    if n in _CLASS_CACHE:
        return _CLASS_CACHE[n]
    if n == 0:
        out = [canonical_form(Graph.empty(0))]
    else:
        seen = set()
        for key in _classes(n - 1):
            g = graph_from_key(key)
            base = g.adjacency()
            new = n - 1
            for r in range(n):
                for nb in combinations(range(n - 1), r):
                    adj = dict(base)
                    m = 0
                    for w in nb:
                        adj[w] |= 1 << new
                        m |= 1 << w
                    adj[new] = m
                    seen.add(canonical_form(Graph(adj, _trusted=True)))
        out = sorted(seen)
    _CLASS_CACHE[n] = out
    return out


def hereditary_corpus(max_n: int, forbidden_path: int) -> list[Graph]:
    """All graphs on ``1..max_n`` vertices with no induced path on
    ``forbidden_path`` vertices.  The class is hereditary, so only extensions
    of members are generated."""
    from .leveling import find_induced_path

    members = {0: [canonical_form(Graph.empty(0))]}
    out = []
    for n in range(1, max_n + 1):
        seen = set()
        for key in members[n - 1]:
            g = graph_from_key(key)
            base = g.adjacency()
            new = n - 1
            for r in range(n):
                for nb in combinations(range(n - 1), r):
                    adj = dict(base)
                    m = 0
                    for w in nb:
                        adj[w] |= 1 << new
                        m |= 1 << w
                    adj[new] = m
                    h = Graph(adj, _trusted=True)
                    k = canonical_form(h)
                    if k in seen:
                        continue
                    res = find_induced_path(h, forbidden_path)
                    assert res.complete
                    if res.path is None:
                        seen.add(k)
        members[n] = sorted(seen)
        out += [graph_from_key(k) for k in members[n]]
    return out
