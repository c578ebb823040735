"""Fan vertex-minors from a connected graph ``H`` glued onto the leaves of an
``E_l`` gadget.

The gadget has a main path ``y_1..y_l``, middle vertices ``x_i ~ y_i`` and
leaves ``w_i ~ x_i``; each leaf is identified with a vertex ``v_i`` of ``H``.
``leaf_map`` lists the triples ``(v_i, x_i, y_i)`` in main-path order.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from ..generators import fan, ladder, one_subdivision
from ..graph import Graph, TraceBuilder, induced_subgraph, is_connected, is_induced_path, mask_of
from ..io import relabel_trace
from ..leveling import clique_or_independent, longest_induced_path
from .basic import connected_reduce, ladder_to_fan
from .common import ExtractionError, certify


def attach_ek(h: Graph, vs: Sequence[int]) -> tuple[Graph, list[int], list[tuple[int, int, int]]]:
    """Glue ``E_l`` (``l = len(vs)``) onto ``h`` with leaf ``i`` identified with
    ``vs[i]``.  New labels start after ``h.max_label()``: ``x_i`` then ``y_i``."""
    base = h.max_label() + 1
    l = len(vs)
    if len(set(vs)) != l or not set(vs) <= set(h.labels):
        raise ExtractionError("identified vertices must be distinct vertices of H")
    leaf_map = [(v, base + i, base + l + i) for i, v in enumerate(vs)]
    edges = list(h.edges())
    edges += [(v, x) for v, x, _ in leaf_map] + [(x, y) for _, x, y in leaf_map]
    edges += [(leaf_map[i][2], leaf_map[i + 1][2]) for i in range(l - 1)]
    return Graph.from_edges(edges, h.labels), list(h.labels), leaf_map


def _check_gadget(host: Graph, hv: set[int], leaf_map) -> None:
    xs = [x for _, x, _ in leaf_map]
    ys = [y for _, _, y in leaf_map]
    vs = [v for v, _, _ in leaf_map]
    if not set(vs) <= hv or len(set(vs)) != len(vs):
        raise ExtractionError("leaves must be distinct vertices of H")
    if set(host.labels) != hv | set(xs) | set(ys):
        raise ExtractionError("host must be exactly H plus the gadget")
    if not is_connected(induced_subgraph(host, hv)):
        raise ExtractionError("H must be connected")
    if not is_induced_path(host, ys):
        raise ExtractionError("gadget main path is not induced")
    for v, x, y in leaf_map:
        if set(host.neighbors(x)) != {v, y}:
            raise ExtractionError(f"middle vertex {x} must see exactly its leaf and path vertex")
    hmask = mask_of(hv)
    for y in ys:
        if host.row(y) & hmask:
            raise ExtractionError("gadget path touches H")


def _pick_rungs(idx: list[int], k: int) -> list[int] | None:
    """Positions ``r_1 < ... < r_k`` along the path, pairwise at least two
    apart, whose indices ``idx[r]`` are strictly monotone and share a parity.
    Gaps of two keep every rail edge of the ladder subdivided."""
    n = len(idx)

    def grow(chosen: list[int], sign: int) -> list[int] | None:
        if len(chosen) == k:
            return chosen
        last = chosen[-1]
        for r in range(last + 2, n):
            d = idx[r] - idx[last]
            if d * sign > 0 and d % 2 == 0:
                out = grow(chosen + [r], sign)
                if out:
                    return out
        return None

    for sign in (1, -1):
        for start in range(n):
            out = grow([start], sign)
            if out:
                return out
    return None


def _case_ladder(tb: TraceBuilder, hpath: list[int], leaf_map, k: int) -> bool:
    order = {v: i for i, (v, _, _) in enumerate(leaf_map)}
    idx = [order[v] for v in hpath]
    rungs = _pick_rungs(idx, k)
    if rungs is None:
        return False
    if idx[rungs[0]] > idx[rungs[-1]]:
        hpath = hpath[::-1]
        idx = idx[::-1]
        rungs = [len(hpath) - 1 - r for r in reversed(rungs)]
    js = [idx[r] for r in rungs]
    w = [hpath[r] for r in rungs]
    x = [leaf_map[j][1] for j in js]
    y = [leaf_map[j][2] for j in js]
    rail_w = hpath[rungs[0]: rungs[-1] + 1]
    rail_y = [leaf_map[z][2] for z in range(js[0], js[-1] + 1)]
    tb.keep_only({*rail_w, *rail_y, *x})
    # smooth each rail segment down to a single subdivision vertex
    mid_w, mid_y = [], []
    for rail, ends, mids in ((rail_w, w, mid_w), (rail_y, y, mid_y)):
        for a, b in zip(ends, ends[1:]):
            seg = rail[rail.index(a) + 1: rail.index(b)]
            for v in seg[1:]:
                tb.sm(v)
            mids.append(seg[0])
    # ladder_to_fan labels: p_i = i, q_i = k+i; P rail is y, Q rail is w
    _, sub = one_subdivision(ladder(k))
    f = {}
    for i in range(k):
        f[i] = y[i]
        f[k + i] = w[i]
        f[sub[(i, k + i)]] = x[i]
    for i in range(k - 1):
        f[sub[(i, i + 1)]] = mid_y[i]
        f[sub[(k + i, k + i + 1)]] = mid_w[i]
    _, trace = ladder_to_fan(k)
    tb.extend(relabel_trace(trace, f))
    return True


def reduce_to_fan(tb: TraceBuilder, hub: int, keep: Iterable[int]) -> None:
    """Smooth away every vertex outside ``keep`` and the hub that has degree
    two; one whose neighbours are already adjacent is deleted."""
    keep = set(keep) | {hub}
    while True:
        g = tb.graph
        for v in g.labels:
            if v in keep or g.degree(v) != 2:
                continue
            a, b = g.neighbors(v)
            if g.has_edge(a, b):
                tb.delete(v)
            else:
                tb.sm(v)
            break
        else:
            return


def _case_star(tb: TraceBuilder, hv: list[int], leaf_map, k: int) -> bool:
    order = {v: i for i, (v, _, _) in enumerate(leaf_map)}
    g = tb.graph
    hmask = mask_of(hv)
    for s in sorted(hv):
        nb = g.row(s) & hmask
        if bin(nb).count("1") < k:
            continue
        found = clique_or_independent(g, k, k, within=nb)
        if found.tag == "neither":
            continue
        if found.tag == "clique":
            tb.lc(s)
        chosen = sorted(found.value, key=order.get)
        iz = [order[v] for v in chosen]
        ys = [leaf_map[z][2] for z in range(iz[0], iz[-1] + 1)]
        xs = [leaf_map[z][1] for z in iz]
        tb.keep_only({s, *chosen, *xs, *ys})
        reduce_to_fan(tb, s, [leaf_map[z][2] for z in iz])
        return True
    return False


@dataclass(frozen=True)
class GadgetResult:
    certificate: object
    case: str


def ek_gadget_to_fan(host: Graph, h_vertices: Iterable[int], leaf_map, k: int, budget: int = 200_000):
    """Vertex-minor certificate for ``F_k`` from H glued to ``E_l``, or None.

    H is first reduced to the identified vertices keeping it connected.  Then
    a long induced path in H gives a subdivided ladder (by a monotone,
    same-parity choice of rungs) and hence a fan; failing that, a vertex of H
    whose neighbourhood holds a k-clique or an independent k-set gives a
    subdivided fan directly (after LC at that vertex for a clique)."""
    hv = set(h_vertices)
    leaf_map = [tuple(t) for t in leaf_map]
    _check_gadget(host, hv, leaf_map)
    if k < 2:
        raise ExtractionError("k must be at least 2")
    vs = [v for v, _, _ in leaf_map]
    tb = TraceBuilder(host)
    tb.extend(connected_reduce(induced_subgraph(host, hv), vs))
    h = induced_subgraph(tb.graph, vs)
    path = longest_induced_path(h, budget).path
    attempt = TraceBuilder(tb.graph)
    if path and _case_ladder(attempt, path, leaf_map, k):
        tb.extend(attempt.trace)
        return GadgetResult(certify(host, tb.trace, fan(k)), "ladder")
    attempt = TraceBuilder(tb.graph)
    if _case_star(attempt, vs, leaf_map, k):
        tb.extend(attempt.trace)
        return GadgetResult(certify(host, tb.trace, fan(k)), "star")
    return None
