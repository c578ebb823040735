"""Exhaustive vertex-minor / pivot-minor containment with replayable witnesses.

Branching uses the deletion rule for a vertex ``v`` of the host that is not
kept: a pivot-minor ``H`` of ``G`` is a pivot-minor of ``G \\ v`` or of
``G ∧ vw \\ v`` for some neighbour ``w``; vertex-minors additionally allow
``G * v \\ v``.  When host and pattern have the same order no deletion is left,
so the pattern must be isomorphic to a graph pivot-equivalent (respectively
locally equivalent) to the host; that orbit is enumerated explicitly.

Decisions are memoised on canonical forms in an LRU cache whose size comes
from ``VMINOR_MEMO_SIZE``.  Witnesses are re-derived by a sequential walk
that follows the first succeeding branch in the fixed order (delete, then
local complementation, then pivots by increasing neighbour label), so the
returned trace is deterministic.  Because the kept vertices are not known in
advance every vertex is branched on, with children deduplicated by canonical
form.
"""
from __future__ import annotations

import enum
import os
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .canon import CanonKey, canonical_form, graph_from_key, is_isomorphic
from .graph import (
    DEL, LC, PV, Graph, GraphError, Op, apply_trace, bits, delete_vertex,
    is_bipartite, local_complement, pivot,
)

MEMO_SIZE = int(os.environ.get("VMINOR_MEMO_SIZE", "500000"))


class Kind(enum.Enum):
    VERTEX = "vertex-minor"
    PIVOT = "pivot-minor"


ALLOWED_OPS = {
    Kind.PIVOT: {"pv", "del"},
    Kind.VERTEX: {"lc", "pv", "sm", "del"},
}


@dataclass(frozen=True)
class WitnessCertificate:
    kind: Kind
    host: Graph
    pattern: Graph
    trace: tuple[Op, ...]

    def result(self) -> Graph:
        return apply_trace(self.host, self.trace)


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def verify_witness(c: WitnessCertificate) -> Verdict:
    bad = [op for op in c.trace if op.kind not in ALLOWED_OPS[c.kind]]
    if bad:
        return Verdict(False, f"op {bad[0].kind!r} not allowed in a {c.kind.value} trace")
    try:
        out = apply_trace(c.host, c.trace)
    except GraphError as e:
        return Verdict(False, f"replay failed: {e}")
    if not is_isomorphic(out, c.pattern):
        return Verdict(False, "replay result is not isomorphic to the pattern")
    return Verdict(True)


# -- equal-order orbits -------------------------------------------------------

def _orbit_moves(g: Graph, kind: Kind):
    if kind is Kind.VERTEX:
        for v in g.labels:
            yield (LC(v),), local_complement(g, v)
    else:
        for u, v in g.edges():
            yield (PV(u, v),), pivot(g, u, v)


@lru_cache(maxsize=MEMO_SIZE)
def _orbit(key: CanonKey, kind: Kind) -> frozenset:
    """Canonical forms of all graphs equivalent to ``key`` under LC (or pivots)."""
    start = graph_from_key(key)
    seen = {key}
    todo = [start]
    while todo:
        g = todo.pop()
        for _, h in _orbit_moves(g, kind):
            hk = canonical_form(h)
            if hk not in seen:
                seen.add(hk)
                todo.append(h)
    return frozenset(seen)


def _orbit_path(g: Graph, target: CanonKey, kind: Kind) -> tuple[Op, ...] | None:
    """Shortest op sequence taking labelled ``g`` to a graph with form ``target``."""
    if canonical_form(g) == target:
        return ()
    parent: dict[CanonKey, tuple] = {canonical_form(g): None}
    queue = deque([(g, ())])
    while queue:
        h, ops = queue.popleft()
        for move, nxt in _orbit_moves(h, kind):
            k = canonical_form(nxt)
            if k in parent:
                continue
            parent[k] = True
            if k == target:
                return ops + move
            queue.append((nxt, ops + move))
    return None


# -- decision ------------------------------------------------------------------

def _children(g: Graph, kind: Kind):
    """All one-vertex-smaller branches in the fixed order: vertices by
    increasing label, and for each one delete, then LC + delete, then
    pivot + delete by increasing neighbour label.

    Every vertex has to be tried.  The deletion rule holds for a vertex outside
    the kept set, and since the pattern is only given up to isomorphism the
    kept set is unknown; branching on the smallest label alone misses e.g.
    ``2K_1`` inside ``K_1 + K_2``.
    """
    for v in g.labels:
        yield (DEL(v),), delete_vertex(g, v)
        if kind is Kind.VERTEX:
            yield (LC(v), DEL(v)), delete_vertex(local_complement(g, v), v)
        for w in bits(g.row(v)):
            yield (PV(v, w), DEL(v)), delete_vertex(pivot(g, v, w), v)


def _prune(host: Graph, pattern_key: CanonKey, kind: Kind) -> bool:
    """Sound necessary conditions; True means the branch cannot succeed."""
    n = pattern_key[0]
    if host.order < n:
        return True
    if kind is Kind.PIVOT and is_bipartite(host) and not _pattern_bipartite(pattern_key):
        # pivoting preserves bipartiteness and so does deletion
        return True
    return False


@lru_cache(maxsize=4096)
def _pattern_bipartite(pattern_key: CanonKey) -> bool:
    return is_bipartite(graph_from_key(pattern_key))


@lru_cache(maxsize=MEMO_SIZE)
def _decide(host_key: CanonKey, pattern_key: CanonKey, kind: Kind) -> bool:
    host = graph_from_key(host_key)
    if _prune(host, pattern_key, kind):
        return False
    if host.order == pattern_key[0]:
        return pattern_key in _orbit(host_key, kind)
    tried = set()
    for _, child in _children(host, kind):
        ck = canonical_form(child)
        if ck in tried:
            continue
        tried.add(ck)
        if _decide(ck, pattern_key, kind):
            return True
    return False


def contains(pattern: Graph, host: Graph, kind: Kind) -> bool:
    return _decide(canonical_form(host), canonical_form(pattern), kind)


def _witness(pattern: Graph, host: Graph, kind: Kind) -> WitnessCertificate | None:
    pk = canonical_form(pattern)
    if not _decide(canonical_form(host), pk, kind):
        return None
    ops: list[Op] = []
    g = host
    while g.order > pattern.order:
        for move, child in _children(g, kind):
            if _decide(canonical_form(child), pk, kind):
                ops += move
                g = child
                break
        else:  # pragma: no cover - memo says yes, so some child must
            raise AssertionError("inconsistent memo")
    tail = _orbit_path(g, pk, kind)
    assert tail is not None
    ops += tail
    return WitnessCertificate(kind, host, pattern, tuple(ops))


def is_pivot_minor(pattern: Graph, host: Graph) -> WitnessCertificate | None:
    return _witness(pattern, host, Kind.PIVOT)


def is_vertex_minor(pattern: Graph, host: Graph) -> WitnessCertificate | None:
    return _witness(pattern, host, Kind.VERTEX)


def clear_memo() -> None:
    _decide.cache_clear()
    _orbit.cache_clear()


def memo_info() -> dict:
    return {"decide": _decide.cache_info()._asdict(), "orbit": _orbit.cache_info()._asdict()}
