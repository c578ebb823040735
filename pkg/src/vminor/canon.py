"""Canonical labelling by colour refinement plus individualisation.

The search tree is the usual one: refine to an equitable partition, pick the
first smallest non-singleton cell, individualise each of its vertices and
recurse.  The canonical form is the largest leaf certificate.  Branches on
vertices that are twins of an already-tried vertex are skipped; swapping twins
is an automorphism fixing the current partition, so the subtrees coincide.
That prune keeps empty, complete and other twin-heavy graphs cheap.
"""
from __future__ import annotations

from functools import lru_cache

from .graph import Graph, bits, compact

CanonKey = tuple  # (n, row_0, row_1, ...)


def _refine(rows: list[int], cells: list[list[int]]) -> list[list[int]]:
    while True:
        cmasks = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            cmasks.append(m)
        out: list[list[int]] = []
        changed = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            sig = {v: tuple(bin(rows[v] & m).count("1") for m in cmasks) for v in c}
            groups: dict[tuple, list[int]] = {}
            for v in c:
                groups.setdefault(sig[v], []).append(v)
            if len(groups) > 1:
                changed = True
                for key in sorted(groups):
                    out.append(groups[key])
            else:
                out.append(c)
        cells = out
        if not changed:
            return cells


def _leaf_cert(rows: list[int], order: list[int]) -> tuple[int, ...]:
    pos = {v: i for i, v in enumerate(order)}
    cert = []
    for v in order:
        r = 0
        for w in bits(rows[v]):
            r |= 1 << pos[w]
        cert.append(r)
    return tuple(cert)


def _are_twins(rows: list[int], a: int, b: int) -> bool:
    mask = ~((1 << a) | (1 << b))
    return rows[a] & mask == rows[b] & mask


def canonical_order(rows: list[int]) -> list[int]:
    """Vertex order (indices into ``rows``) realising the canonical form."""
    n = len(rows)
    if n == 0:
        return []
    best: list = [None, None]

    def search(cells: list[list[int]]) -> None:
        cells = _refine(rows, cells)
        if len(cells) == n:
            order = [c[0] for c in cells]
            cert = _leaf_cert(rows, order)
            if best[0] is None or cert > best[0]:
                best[0], best[1] = cert, order
            return
        idx = min((i for i, c in enumerate(cells) if len(c) > 1), key=lambda i: (len(cells[i]), i))
        target = cells[idx]
        tried: list[int] = []
        for v in target:
            if any(_are_twins(rows, v, t) for t in tried):
                continue
            tried.append(v)
            rest = [w for w in target if w != v]
            search(cells[:idx] + [[v], rest] + cells[idx + 1:])

    search([list(range(n))])
    return best[1]


def canonical_form(g: Graph) -> CanonKey:
    """Relabelling-invariant key; equal keys iff isomorphic graphs."""
    return _canonical_form(g)[0]


def canonical_labeling(g: Graph) -> dict[int, int]:
    """Map from labels of ``g`` to canonical positions ``0..n-1``."""
    return dict(_canonical_form(g)[1])


@lru_cache(maxsize=200_000)
def _canonical_form(g: Graph) -> tuple[CanonKey, dict[int, int]]:
    h, f = compact(g)
    rows = [h.row(i) for i in range(h.order)]
    order = canonical_order(rows)
    inv = {i: v for v, i in f.items()}
    key = (h.order, *_leaf_cert(rows, order))
    return key, {inv[v]: pos for pos, v in enumerate(order)}


def graph_from_key(key: CanonKey) -> Graph:
    n, *rows = key
    return Graph({i: rows[i] for i in range(n)}, _trusted=True)


def canonical_graph(g: Graph) -> Graph:
    return graph_from_key(canonical_form(g))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.order != h.order or g.size != h.size:
        return False
    if sorted(map(g.degree, g.labels)) != sorted(map(h.degree, h.labels)):
        return False
    return canonical_form(g) == canonical_form(h)


def isomorphism(g: Graph, h: Graph) -> dict[int, int] | None:
    """A label map ``g -> h`` that is an isomorphism, or None."""
    if not is_isomorphic(g, h):
        return None
    cg, ch = canonical_labeling(g), canonical_labeling(h)
    back = {p: v for v, p in ch.items()}
    return {v: back[p] for v, p in cg.items()}
