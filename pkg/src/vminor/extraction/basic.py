"""Small reductions: connectivity-preserving elimination, ladder to fan,
cycle shortening, and cleaning a subdivided fan down to a fan."""
from __future__ import annotations

from typing import Iterable

from ..generators import cycle, fan, ladder, one_subdivision
from ..graph import (
    DEL, LC, Graph, Op, TraceBuilder, delete_vertex, is_connected, local_complement,
)
from .common import ExtractionError, certify, require_connected


def connected_reduce(h: Graph, keep: Iterable[int]) -> tuple[Op, ...]:
    """Eliminate every vertex outside ``keep`` (in label order) so the graph
    stays connected: plain deletion when that keeps it connected, otherwise
    local complementation first (one of the two always works)."""
    require_connected(h)
    keep = set(keep)
    if not keep <= set(h.labels):
        raise ExtractionError("keep set has unknown labels")
    ops: list[Op] = []
    g = h
    for v in h.labels:
        if v in keep:
            continue
        d = delete_vertex(g, v)
        if is_connected(d):
            ops.append(DEL(v))
            g = d
            continue
        d = delete_vertex(local_complement(g, v), v)
        assert is_connected(d), "neither deletion kept the graph connected"
        ops += [LC(v), DEL(v)]
        g = d
    return tuple(ops)


def ladder_to_fan(k: int) -> tuple[Graph, tuple[Op, ...]]:
    """1-subdivided ladder of order ``k`` and a trace turning it into ``F_k``.

    Pivot each rail-1 vertex with the subdivision vertex towards the next one,
    delete those pairs, then smooth the rung and rail-2 subdivision vertices.
    The last rail-1 vertex becomes the hub and rail 2 the path.
    """
    if k < 2:
        raise ExtractionError("ladder_to_fan needs k >= 2")
    g, sub = one_subdivision(ladder(k))
    p = list(range(k))
    q = [k + i for i in range(k)]
    tb = TraceBuilder(g)
    pairs = [(p[i], sub[(p[i], p[i + 1])]) for i in range(k - 1)]
    for a, b in pairs:
        tb.pv(a, b)
    for a, b in pairs:
        tb.delete(a, b)
    for i in range(k):
        tb.sm(sub[(p[i], q[i])])
    for i in range(k - 1):
        tb.sm(sub[(q[i], q[i + 1])])
    certify(g, tb.trace, fan(k))
    return g, tb.trace


def cycle_shorten(g: Graph):
    """Pivot the lowest edge of an induced cycle and delete both ends."""
    n = g.order
    if n < 5:
        raise ExtractionError("cycle_shorten needs a cycle of length >= 5")
    if g.size != n or any(g.degree(v) != 2 for v in g.labels) or not is_connected(g):
        raise ExtractionError("input is not a cycle")
    x, y = g.edges()[0]
    tb = TraceBuilder(g)
    tb.pv(x, y)
    tb.delete(x, y)
    return certify(g, tb.trace, cycle(n - 2))


def shorten_to(g: Graph, k: int):
    """Repeated :func:`cycle_shorten` from ``C_n`` down to ``C_k``."""
    n = g.order
    if k < 3 or k > n or (n - k) % 2:
        raise ExtractionError("need 3 <= k <= n with n = k (mod 2)")
    tb = TraceBuilder(g)
    while tb.graph.order > k:
        tb.extend(cycle_shorten(tb.graph).trace)
    return certify(g, tb.trace, cycle(k))


def clean_subdivided_fan(tb: TraceBuilder, hub: int, ends: tuple[int, int] | None = None) -> None:
    """Turn a (partially) subdivided fan around ``hub`` into a fan.

    Degree-2 vertices away from the hub are smoothed; a degree-2 vertex whose
    two neighbours are already adjacent is deleted instead.  Repeats until no
    such vertex remains.
    """
    while True:
        g = tb.graph
        hub_nb = g.row(hub)
        for v in g.labels:
            if v == hub or hub_nb >> v & 1 or g.degree(v) != 2:
                continue
            a, b = g.neighbors(v)
            if g.has_edge(a, b):
                tb.delete(v)
            else:
                tb.sm(v)
            break
        else:
            return
