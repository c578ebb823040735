"""Induced matchings between a long induced path ``T`` and a set ``S``
covering it, via patched paths.

A patched path pairs ``s_1..s_l`` with strictly increasing positions
``b_1 < ... < b_l`` on the path so that ``s_j`` is adjacent to ``q_{b_j}``
and to nothing later on the path.  It is *simple* when moreover ``s_j`` has
no neighbour at or before ``b_{j-1}``.  Positions here are 0-based indices
into ``T``.

The size bounds that guarantee success are astronomically large, so the
searches also run on small inputs and report the longest structure found.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from ..graph import Graph, TraceBuilder, is_induced_path, mask_of
from .common import ExtractionError, HighDegree, certify


def geometric_sum(k: int, top: int) -> int:
    """``1 + (k-1) + ... + (k-1)^top`` (0 when ``top < 0``)."""
    return sum((k - 1) ** e for e in range(top + 1))


@dataclass(frozen=True)
class PatchedPath:
    host: Graph
    S: tuple[int, ...]
    T: tuple[int, ...]
    b: tuple[int, ...]
    simple: bool = False

    def __len__(self) -> int:
        return len(self.S)


def t_positions(g: Graph, s: int, T: Sequence[int]) -> list[int]:
    row = g.row(s)
    return [i for i, q in enumerate(T) if row >> q & 1]


def check_patched(c: PatchedPath) -> None:
    """Raise ExtractionError unless ``c`` satisfies its definition."""
    g = c.host
    if not is_induced_path(g, c.T):
        raise ExtractionError("T is not an induced path")
    if len(c.S) != len(c.b) or list(c.b) != sorted(set(c.b)):
        raise ExtractionError("b must be strictly increasing, one per s")
    if c.b and c.b[-1] >= len(c.T):
        raise ExtractionError("b out of range")
    for j, (s, bj) in enumerate(zip(c.S, c.b)):
        pos = t_positions(g, s, c.T)
        if bj not in pos or pos[-1] != bj:
            raise ExtractionError(f"s_{j + 1} must have its last path neighbour at b_{j + 1}")
        if c.simple and j and pos[0] <= c.b[j - 1]:
            raise ExtractionError(f"s_{j + 1} has a neighbour at or before b_{j}")


def _high_degree(g: Graph, S: Iterable[int], T: Sequence[int], k: int) -> HighDegree | None:
    tm = mask_of(T)
    for s in sorted(S):
        nb = g.row(s) & tm
        if bin(nb).count("1") >= k:
            return HighDegree(s, tuple(q for q in T if nb >> q & 1))
    return None


def find_patched_path(g: Graph, S: Iterable[int], T: Sequence[int], ell: int, k: int):
    """Greedy walk along the path: take the lowest-label ``S``-neighbour of
    the first vertex not yet passed, and pair it with its first neighbour
    followed by a long enough stretch of non-neighbours.  Returns HighDegree,
    or the longest valid patched path (at most ``ell`` long) on a prefix of
    ``T``."""
    S = sorted(set(S))
    T = tuple(T)
    if not is_induced_path(g, T):
        raise ExtractionError("T is not an induced path")
    smask = mask_of(S)
    if any(not g.row(q) & smask for q in T):
        raise ExtractionError("every path vertex needs a neighbour in S")
    hd = _high_degree(g, S, T, k)
    if hd:
        return hd
    chosen: list[int] = []
    b: list[int] = []
    start = 0
    while len(chosen) < ell and start < len(T):
        window = geometric_sum(k, ell - len(chosen) - 1)
        ext = None
        for s in (x for x in S if g.has_edge(x, T[start]) and x not in chosen):
            pos = [p for p in t_positions(g, s, T) if p >= start]
            for p in pos:
                if not any(p < r <= p + window for r in pos):
                    break
            # earlier s's must not see anything up to the new position
            lo = b[-1] + 1 if b else 0
            if all(not g.has_edge(t, q) for t in chosen for q in T[lo:p + 1]):
                ext = (s, p)
                break
        if ext is None:
            break
        chosen.append(ext[0])
        b.append(ext[1])
        start = ext[1] + 1
    if not chosen:
        raise ExtractionError("no patched path")
    c = PatchedPath(g, tuple(chosen), T[: b[-1] + 1], tuple(b))
    check_patched(c)
    return c


def simplify_patched_path(c: PatchedPath, k: int, ell: int):
    """Simple ``ell``-patched path whose path is a suffix of ``c.T``, by the
    friend-counting recursion: the last ``s`` picks the neighbour with most
    paired positions right before it, and the recursion runs on those.

    Candidates are tried in decreasing friend count, so on small inputs the
    search backtracks instead of giving up.  Returns HighDegree, the simple
    certificate, or None when no choice works."""
    if len(c.S) < ell:
        raise ExtractionError(f"need at least {ell} paired vertices, got {len(c.S)}")
    g, T = c.host, c.T
    hd = _high_degree(g, c.S, T, k)
    if hd:
        return hd
    pair_of = dict(zip(c.b, c.S))

    def solve(items: list[tuple[int, int]], lo: int, hi: int, need: int):
        """``items``: (position, s) sorted by position inside ``[lo, hi]``.
        Returns (list of (position, s), start) or None."""
        if len(items) < need:
            return None
        if need == 1:
            p, s = items[-1]
            return [(p, s)], lo
        p_last, s_last = items[-1]
        nbrs = [p for p in t_positions(g, s_last, T) if lo <= p <= hi]
        cands = []
        for i, t in enumerate(nbrs):
            prev = nbrs[i - 1] if i else lo - 1
            friends = [(p, s) for p, s in items[:-1] if prev < p < t]
            if len(friends) >= need - 1:
                cands.append((-len(friends), t, friends))
        for _, t, friends in sorted(cands, key=lambda x: (x[0], x[1])):
            sub = solve(friends, friends[0][0], t - 1, need - 1)
            if sub is not None:
                chosen, start = sub
                return chosen + [(p_last, s_last)], start
        return None

    items = sorted(pair_of.items())
    res = solve(items, 0, len(T) - 1, ell)
    if res is None:
        return None
    chosen, start = res
    out = PatchedPath(
        g,
        tuple(s for _, s in chosen),
        T[start:],
        tuple(p - start for p, _ in chosen),
        simple=True,
    )
    check_patched(out)
    return out


@dataclass(frozen=True)
class Matching:
    """Result of :func:`patched_to_matching`: ``S[i]`` is matched to ``T[i]``."""

    certificate: object
    S: tuple[int, ...]
    T: tuple[int, ...]


def patched_to_matching(c: PatchedPath, scope: Iterable[int] | None = None) -> Matching:
    """Reduce a simple ``2l``-patched path to an induced matching of size ``l``.

    Only vertices in ``scope`` (default: the whole host) are deleted; those
    outside must have no neighbours on the path.  All LC/PV/SM ops happen at
    path vertices, so the graph induced on ``S`` is unchanged."""
    if not c.simple:
        raise ExtractionError("patched_to_matching needs a simple patched path")
    check_patched(c)
    if not c.S or len(c.S) % 2:
        raise ExtractionError("need an even, positive number of paired vertices")
    g0 = c.host
    scope = set(g0.labels if scope is None else scope)
    tb = TraceBuilder(g0)
    tb.delete(*sorted(scope - set(c.S) - set(c.T)))
    S = list(c.S)
    smask = mask_of(S)
    path = list(c.T)

    def s_nbrs(q: int) -> int:
        return tb.graph.row(q) & smask

    # shrink the path until every vertex has an S-neighbour and no s sees
    # four consecutive path vertices
    changed = True
    while changed:
        changed = False
        for end in (0, -1):
            if len(path) > 1 and not s_nbrs(path[end]):
                tb.delete(path.pop(end))
                changed = True
                break
        if changed:
            continue
        for j in range(1, len(path) - 1):
            if not s_nbrs(path[j]):
                tb.sm(path.pop(j))
                changed = True
                break
        if changed:
            continue
        for s in S:
            row = tb.graph.row(s)
            for x in range(len(path) - 3):
                if all(row >> q & 1 for q in path[x:x + 4]):
                    q = path.pop(x + 1)
                    tb.lc(q)
                    tb.delete(q)
                    changed = True
                    break
            if changed:
                break

    keep = S[1::2]
    tb.delete(*S[0::2])
    smask = mask_of(keep)
    matched = []
    for s in keep:
        pos = [i for i, q in enumerate(path) if tb.graph.has_edge(s, q)]
        r = len(pos)
        if not 1 <= r <= 3 or pos != list(range(pos[0], pos[0] + r)):
            raise ExtractionError("paired vertex does not see a short run of the path")
        b = pos[-1]
        if r > 1 and b - r < 0:
            raise ExtractionError("no path vertex before the run to take over")
        if r == 1:
            matched.append(path[b])
        elif r == 2:
            q = path.pop(b - 1)
            tb.lc(q)
            tb.delete(q)
            matched.append(path[b - 2])
        else:
            x, y = path[b - 2], path[b - 1]
            tb.pv(x, y)
            tb.delete(x, y)
            del path[b - 2:b]
            matched.append(path[b - 3])
    while len(path) > len(matched):
        for j, q in enumerate(path):
            if q in matched:
                continue
            if j in (0, len(path) - 1):
                tb.delete(path.pop(j))
            else:
                tb.sm(path.pop(j))
            break
    if path != matched:
        raise ExtractionError("matched vertices out of path order")
    g = tb.graph
    for i, s in enumerate(keep):
        for j, q in enumerate(matched):
            assert g.has_edge(s, q) == (i == j), "matching is not induced"
    for a in keep:
        assert g.row(a) & smask == g0.row(a) & smask, "graph on S changed"
    tset = set(c.T)
    assert all(op.kind == "del" or set(op.args) <= tset for op in tb.trace)
    cert = certify(g0, tb.trace, g)
    return Matching(cert, tuple(keep), tuple(matched))


def induced_matching_from_path(
    g: Graph, S: Iterable[int], T: Sequence[int], ell: int, k: int,
    scope: Iterable[int] | None = None,
):
    """HighDegree, an induced matching of size ``ell`` (:class:`Matching`),
    or None when the instance is too small for the chain of reductions."""
    S = sorted(set(S))
    target = geometric_sum(k, 2 * ell - 1)
    first = find_patched_path(g, S, T, target, k)
    if isinstance(first, HighDegree):
        return first
    if len(first) < 2 * ell:
        return None
    simple = simplify_patched_path(first, k, 2 * ell)
    if simple is None or isinstance(simple, HighDegree):
        return simple
    return patched_to_matching(simple, scope if scope is not None else [*S, *T])


def random_patched_host(n: int, k: int, seed: int, window: int = 3, s_edges: float = 0.3) -> tuple[Graph, list[int], list[int]]:
    """A path ``0..n-1`` covered by ``S`` vertices with at most ``k-1``
    path neighbours each, within a short window, plus random edges inside
    ``S``.  Returns ``(graph, S, T)``."""
    rng = random.Random(seed)
    edges = [(i, i + 1) for i in range(n - 1)]
    S = []
    nxt = n
    covered = set()
    i = 0
    while i < n:
        span = list(range(i, min(n, i + window)))
        pick = sorted(rng.sample(span, min(len(span), rng.randint(1, k - 1))))
        if i not in pick:
            pick = [i] + pick[: k - 2]
        edges += [(nxt, q) for q in pick]
        S.append(nxt)
        nxt += 1
        covered.update(pick)
        while i in covered:
            i += 1
    edges += [(a, b) for x, a in enumerate(S) for b in S[x + 1:] if rng.random() < s_edges]
    return Graph.from_edges(edges, range(nxt)), S, list(range(n))
