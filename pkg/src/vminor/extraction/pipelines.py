"""End-to-end searches: a fan vertex-minor or a cycle pivot-minor in an
arbitrary connected graph, following the leveling arguments.

Both pipelines build a BFS leveling, look for a long induced path inside one
level, and push structure up the levels until one of the constructive
lemmas applies.  They are budgeted and return an :class:`Outcome` whose
``notes`` record which branches were tried.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..canon import is_isomorphic
from ..generators import cycle, fan
from ..graph import Graph, TraceBuilder, bits, is_bipartite, mask_of
from ..leveling import (
    ancestor_path, build_leveling, clique_or_independent, find_induced_path,
    first_common_ancestor, longest_induced_path, max_independent_set, parents,
)
from .basic import shorten_to
from .common import ExtractionError, HighDegree, Outcome, certify, require_connected
from .cycles import FanView, _to_cycle, check_view
from .fans import ek_gadget_to_fan, reduce_to_fan
from .patched import Matching, induced_matching_from_path


@dataclass
class Budget:
    """Search limits: DFS node cap for induced paths and the longest path tried."""

    nodes: int = 200_000
    path_len: int = 24
    roots: int | None = None  # how many roots to try (None: all)


# -- fans ----------------------------------------------------------------------

def _fan_from_hub(tb: TraceBuilder, hub: int, spokes: list[tuple[int, int]], path: list[int], k: int) -> bool:
    """``spokes``: (middle, path vertex) pairs in path order, ``middle`` may be
    None for a direct hub-path edge.  Keeps the hub, the spokes and the path
    segment they span, then smooths down to ``F_k``."""
    ends = [q for _, q in spokes[:k]]
    lo, hi = path.index(ends[0]), path.index(ends[-1])
    mids = [m for m, _ in spokes[:k] if m is not None]
    tb.keep_only({hub, *mids, *path[lo:hi + 1]})
    reduce_to_fan(tb, hub, ends)
    return is_isomorphic(tb.graph, fan(k))


def _try_level(g: Graph, lv, n: int, path: list[int], k: int, budget: Budget, notes: list[str]):
    if n == 1:
        if len(path) < k:
            return None
        tb = TraceBuilder(g)
        tb.keep_only({lv.root, *path[:k]})
        notes.append("path in the first level: fan on the root")
        return certify(g, tb.trace, fan(k))
    deeper = [v for lvl in lv.levels[n:] for v in lvl if v not in path]
    base = TraceBuilder(g)
    base.delete(*sorted(deeper))
    S = list(lv.levels[n - 1])
    scope = [*S, *path]
    for size in range(len(path) // 2, 0, -1):
        try:
            res = induced_matching_from_path(base.graph, S, path, size, k, scope)
        except ExtractionError as e:
            notes.append(f"matching of size {size}: {e}")
            continue
        if res is None:
            continue
        if isinstance(res, HighDegree):
            tb = TraceBuilder(base.graph)
            if _fan_from_hub(tb, res.vertex, [(None, q) for q in res.neighbors], path, k):
                notes.append(f"vertex {res.vertex} sees {len(res.neighbors)} path vertices")
                return certify(g, base.trace + tb.trace, fan(k))
            continue
        out = _from_matching(g, base, lv, n, res, k, budget, notes)
        if out is not None:
            return out
    return None


def _from_matching(g: Graph, base: TraceBuilder, lv, n: int, m: Matching, k: int, budget: Budget, notes):
    cert = m.certificate
    g1 = cert.result()
    S, T = list(m.S), list(m.T)
    pre = base.trace + cert.trace
    smask = mask_of(S)
    # a (k+1)-clique among the matched vertices
    found = clique_or_independent(g1, k + 1, 1, within=smask)
    if found.tag == "clique":
        c = sorted(found.value, key=S.index)
        hub = T[S.index(c[0])]
        tb = TraceBuilder(g1)
        tb.lc(c[0])
        spokes = [(s, T[S.index(s)]) for s in c[1:]]
        if tb.graph.has_edge(hub, spokes[0][1]):
            spokes[0] = (None, spokes[0][1])
        lower = [v for lvl in lv.levels[: n - 1] for v in lvl]
        tb.delete(*[v for v in lower if v in tb.graph])
        if _fan_from_hub(tb, hub, spokes, T, k):
            notes.append(f"clique of size {k + 1} among matched vertices")
            return certify(g, pre + tb.trace, fan(k))
    ind = max_independent_set(g1, within=smask)
    ind = sorted(ind, key=S.index)
    up = lv.levels[n - 2]
    # a vertex one level up seeing k independent matched vertices
    for u in up:
        seen = [s for s in ind if g1.has_edge(u, s)]
        if len(seen) >= k:
            tb = TraceBuilder(g1)
            if _fan_from_hub(tb, u, [(s, T[S.index(s)]) for s in seen], T, k):
                notes.append(f"vertex {u} sees {k} independent matched vertices")
                return certify(g, pre + tb.trace, fan(k))
    if n < 3:
        return None
    # greedy induced matching between the level above and the independent set
    ws, xs = [], []
    for s in ind:
        for w in up:
            if not g1.has_edge(w, s) or w in ws:
                continue
            if any(g1.has_edge(w, x) for x in xs) or any(g1.has_edge(v, s) for v in ws):
                continue
            ws.append(w)
            xs.append(s)
            break
    if len(ws) < 2:
        return None
    ys = [T[S.index(x)] for x in xs]
    tb = TraceBuilder(g1)
    upper = [v for lvl in lv.levels[: n - 2] for v in lvl]
    tb.keep_only({*upper, *ws, *xs, *T})
    path = list(T)
    while True:
        extra = [q for q in path if q not in ys]
        if not extra:
            break
        q = extra[0]
        i = path.index(q)
        if i in (0, len(path) - 1):
            tb.delete(q)
        else:
            tb.sm(q)
        path.remove(q)
    order = sorted(range(len(ws)), key=lambda i: path.index(ys[i]))
    leaf_map = [(ws[i], xs[i], ys[i]) for i in order]
    hv = [*upper, *ws]
    res = ek_gadget_to_fan(tb.graph, hv, leaf_map, k, budget.nodes)
    if res is None:
        notes.append(f"gadget with {len(ws)} leaves gave no fan")
        return None
    notes.append(f"gadget with {len(ws)} leaves, {res.case} case")
    return certify(g, pre + tb.trace + res.certificate.trace, fan(k))


def pipeline_fan(g: Graph, k: int, budget: Budget | None = None) -> Outcome:
    """Search for a vertex-minor ``F_k`` through the leveling construction."""
    budget = budget or Budget()
    require_connected(g)
    notes: list[str] = []
    target = fan(k)
    if is_isomorphic(g, target):
        return Outcome(certify(g, (), target), ["graph is the fan itself"])
    roots = g.labels if budget.roots is None else g.labels[: budget.roots]
    for root in roots:
        lv = build_leveling(g, root)
        for n in range(1, len(lv.levels)):
            within = mask_of(lv.levels[n])
            res = longest_induced_path(g, budget.nodes, within=within, cap=budget.path_len)
            if len(res.path) < 2:
                continue
            cert = _try_level(g, lv, n, list(res.path), k, budget, notes)
            if cert is not None:
                notes.append(f"root {root}, level {n}, path on {len(res.path)} vertices")
                return Outcome(cert, notes)
    notes.append("no branch produced a fan")
    return Outcome(None, notes)


# -- cycles ----------------------------------------------------------------------

def shortest_odd_cycle(g: Graph) -> list[int] | None:
    best = None
    for r in g.labels:
        dist, par = {r: 0}, {r: None}
        order = [r]
        for a in order:
            for b in bits(g.row(a)):
                if b not in dist:
                    dist[b] = dist[a] + 1
                    par[b] = a
                    order.append(b)
        for u, w in g.edges():
            if u in dist and w in dist and dist[u] == dist[w]:
                pu, pw = [u], [w]
                while pu[-1] != pw[-1]:
                    pu.append(par[pu[-1]])
                    pw.append(par[pw[-1]])
                cyc = pu + pw[-2::-1]
                if best is None or len(cyc) < len(best):
                    best = cyc
    return best


def _fan_cycle(g: Graph, pre: tuple, view: FanView, k: int, notes: list[str], why: str):
    tb = TraceBuilder(g)
    tb.extend(pre)
    tb.keep_only({view.apex, *view.path})
    try:
        check_view(tb.graph, view)
    except ExtractionError as e:
        notes.append(f"{why}: {e}")
        return None
    case = _to_cycle(tb, view, k)
    if case is None:
        notes.append(f"{why}: no case of the gap analysis applies")
        return None
    notes.append(f"{why}: {case}")
    return certify(g, tb.trace, cycle(k))


def pipeline_cycle(g: Graph, k: int, budget: Budget | None = None) -> Outcome:
    """Search for a pivot-minor ``C_k`` through the leveling construction."""
    budget = budget or Budget()
    require_connected(g)
    if k < 3:
        raise ExtractionError("k must be at least 3")
    notes: list[str] = []
    if k == 3:
        if is_bipartite(g):
            return Outcome(None, ["bipartite graphs have no C_3 pivot-minor"])
        cyc = shortest_odd_cycle(g)
        tb = TraceBuilder(g)
        tb.keep_only(cyc)
        tb.extend(shorten_to(tb.graph, 3).trace)
        return Outcome(certify(g, tb.trace, cycle(3)), [f"shortest odd cycle has length {len(cyc)}"])
    if is_isomorphic(g, cycle(k)):
        return Outcome(certify(g, (), cycle(k)), ["graph is the cycle itself"])
    roots = g.labels if budget.roots is None else g.labels[: budget.roots]
    for root in roots:
        lv = build_leveling(g, root)
        for n in range(1, len(lv.levels)):
            within = mask_of(lv.levels[n])
            top = min(budget.path_len, len(lv.levels[n]))
            for size in range(top, k - 2, -1):
                t = size - 1
                if (t - k) % 2:
                    continue
                res = find_induced_path(g, size, budget.nodes, within=within)
                if res.path is None:
                    continue
                cert = _cycle_from_path(g, lv, n, list(res.path), k, notes)
                if cert is not None:
                    notes.append(f"root {root}, level {n}, path of length {t}")
                    return Outcome(cert, notes)
    notes.append("no branch produced a cycle")
    return Outcome(None, notes)


def _cycle_from_path(g: Graph, lv, n: int, path: list[int], k: int, notes: list[str]):
    if n == 1:
        return _fan_cycle(g, (), FanView(lv.root, tuple(path)), k, notes, "root as apex")
    p0, pt = path[0], path[-1]
    x = min(parents(g, lv, p0))
    y = min(parents(g, lv, pt))
    if g.has_edge(x, pt):
        return _fan_cycle(g, (), FanView(x, tuple(path)), k, notes, "parent of first vertex sees both ends")
    if g.has_edge(y, p0):
        return _fan_cycle(g, (), FanView(y, tuple(path)), k, notes, "parent of last vertex sees both ends")
    z = first_common_ancestor(g, lv, x, y)
    p1 = ancestor_path(g, lv, z, x)
    p2 = ancestor_path(g, lv, z, y)
    q = p1 + p2[-2::-1]
    tb = TraceBuilder(g)
    tb.keep_only({*path, *q})
    while len(q) > 3:
        c = len(q) // 2
        tb.pv(q[c], q[c - 1])
        tb.delete(q[c], q[c - 1])
        q = q[: c - 1] + q[c + 1:]
    tb.pv(q[0], q[1])
    tb.delete(q[0], q[1])
    return _fan_cycle(g, tb.trace, FanView(y, tuple(path)), k, notes, "shrunk ancestor path")
