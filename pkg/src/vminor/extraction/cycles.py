"""Pivot-minor cycles and fans out of incomplete fans.

An incomplete fan is an apex ``a`` plus an induced path ``p_0..p_n`` with
``a`` adjacent to both ends.  The apex neighbours sit at path positions
``i_1 = 0 < i_2 < ... < i_t = n`` and the gaps are the differences of
consecutive positions.  Everything here works on a :class:`FanView` inside a
:class:`TraceBuilder`, so the pipelines can call the same code on a fan
embedded in a larger host after deleting the rest.

The one move used over and over: pivot two consecutive path vertices and
delete them.  The path stays induced (their outer neighbours become
adjacent) and the apex adjacency of the outer neighbours is toggled
according to which of the two were apex neighbours.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..generators import cycle, fan, fan_from_gaps
from ..graph import Graph, TraceBuilder, delete_vertex, is_induced_path
from .basic import shorten_to
from .common import ExtractionError, certify


@dataclass(frozen=True)
class FanView:
    apex: int
    path: tuple[int, ...]

    def indices(self, g: Graph) -> list[int]:
        row = g.row(self.apex)
        return [i for i, p in enumerate(self.path) if row >> p & 1]

    def gaps(self, g: Graph) -> list[int]:
        idx = self.indices(g)
        return [b - a for a, b in zip(idx, idx[1:])]

    def mirrored(self) -> "FanView":
        return FanView(self.apex, self.path[::-1])

    @property
    def n(self) -> int:
        return len(self.path) - 1


def check_view(g: Graph, view: FanView) -> None:
    if set(g.labels) != {view.apex, *view.path}:
        raise ExtractionError("graph is not exactly apex plus path")
    if not is_induced_path(g, view.path):
        raise ExtractionError("path is not induced")
    if len(view.path) < 2 or not (g.has_edge(view.apex, view.path[0]) and g.has_edge(view.apex, view.path[-1])):
        raise ExtractionError("apex must be adjacent to both path ends")


def infer_fan(g: Graph, apex: int | None = None) -> FanView:
    """Find an apex whose removal leaves an induced path with both ends
    adjacent to it.  Candidates are tried from the highest label down, which
    matches the labelling of :func:`vminor.generators.incomplete_fan`."""
    cands = [apex] if apex is not None else sorted(g.labels, reverse=True)
    for a in cands:
        rest = delete_vertex(g, a)
        ends = [v for v in rest.labels if rest.degree(v) == 1]
        if rest.order < 2 or len(ends) != 2 or rest.size != rest.order - 1:
            continue
        path = [min(ends)]
        while len(path) < rest.order:
            nxt = [w for w in rest.neighbors(path[-1]) if w not in path[-2:]]
            if len(nxt) != 1:
                break
            path.append(nxt[0])
        view = FanView(a, tuple(path))
        if len(path) == rest.order and g.has_edge(a, path[0]) and g.has_edge(a, path[-1]):
            return view
    raise ExtractionError("graph is not an incomplete fan")


def restrict(tb: TraceBuilder, view: FanView, lo: int, hi: int) -> FanView:
    """Delete everything but the apex and ``path[lo..hi]``."""
    keep = view.path[lo:hi + 1]
    if not (tb.graph.has_edge(view.apex, keep[0]) and tb.graph.has_edge(view.apex, keep[-1])):
        raise ExtractionError("sub-fan ends must be apex neighbours")
    tb.keep_only({view.apex, *keep})
    return FanView(view.apex, keep)


def shrink(tb: TraceBuilder, view: FanView, j: int) -> FanView:
    """Pivot ``p_j p_{j+1}`` and delete both (``1 <= j <= n-2``)."""
    if not 1 <= j <= view.n - 2:
        raise ExtractionError("shrink needs an interior pair")
    a, b = view.path[j], view.path[j + 1]
    tb.pv(a, b)
    tb.delete(a, b)
    return FanView(view.apex, view.path[:j] + view.path[j + 2:])


def shrink_gap(tb: TraceBuilder, view: FanView, pos: int, target: int) -> FanView:
    """Shrink the gap starting at path position ``pos`` to ``target`` by
    pivoting pairs of non-neighbours just after ``pos``."""
    idx = view.indices(tb.graph)
    end = idx[idx.index(pos) + 1]
    length = end - pos
    if length < target or (length - target) % 2:
        raise ExtractionError("gap cannot be shrunk to the requested length")
    for _ in range((length - target) // 2):
        view = shrink(tb, view, pos + 1)
    return view


# -- odd gaps --------------------------------------------------------------------

def _odd_gap(tb: TraceBuilder, view: FanView) -> FanView:
    """Turn a fan with first gap ``k > 1``, middle positions of one parity and
    the last of the other into the cycle ``a p_0 .. p_{i_2 - 1} a``.

    Pivoting the last path edge and deleting both ends moves the last apex
    neighbour two steps in while keeping the parity pattern; once the last
    neighbour sits right after ``p_{i_2}`` the same move makes
    ``p_{i_2 - 1}`` an apex neighbour and leaves the cycle.
    """
    g = tb.graph
    idx = view.indices(g)
    if len(idx) < 3:
        raise ExtractionError("odd gap extraction needs three apex neighbours")
    k = idx[1]
    if k <= 1 or any((i - idx[1]) % 2 for i in idx[1:-1]) or (idx[-1] - idx[1]) % 2 == 0:
        raise ExtractionError("parity precondition violated")
    path = view.path
    while len(path) - 1 > k - 1:
        a, b = path[-2], path[-1]
        tb.pv(a, b)
        tb.delete(a, b)
        path = path[:-2]
    out = FanView(view.apex, path)
    return out


def odd_gap_extract(g: Graph, view: FanView | None = None):
    """Pivot-minor certificate for ``C_{k+1}`` where ``k`` is the first gap.

    A fan with just two apex neighbours is already a cycle and is returned
    with an empty trace."""
    view = view or infer_fan(g)
    check_view(g, view)
    tb = TraceBuilder(g)
    if len(view.indices(g)) == 2:
        return certify(g, (), cycle(g.order))
    _odd_gap(tb, view)
    return certify(g, tb.trace, cycle(view.indices(g)[1] + 1))


# -- consecutive and evenly spaced fans ----------------------------------------------

def _consecutive(tb: TraceBuilder, view: FanView, k: int, even: bool) -> None:
    """On a fan whose first ``4k`` path vertices are apex neighbours, leave
    ``C_{2k+1}`` (or ``C_{2k+2}`` when ``even``)."""
    p = view.path
    if len(p) < 4 * k or any(not tb.graph.has_edge(view.apex, x) for x in p[:4 * k]):
        raise ExtractionError(f"need 4k = {4 * k} consecutive apex neighbours")
    for j in range(1, k):
        tb.pv(p[4 * j - 2], p[4 * j - 1])
        tb.delete(p[4 * j - 2], p[4 * j - 1])
    keep = [view.apex] + [p[4 * j + e] for j in range(k) for e in (0, 1)]
    if even:
        # with pivot = G*u*v*u the two labels trade places: after this pivot
        # p_{4k-1} plays the role the proof gives to p_{4k-2}
        tb.pv(p[4 * k - 2], p[4 * k - 1])
        keep.append(p[4 * k - 1])
    tb.keep_only(keep)


def consecutive_fan_to_cycles(k: int):
    """``F_{4k}`` and certificates for ``C_{2k+1}`` and ``C_{2k+2}``."""
    if k < 1:
        raise ExtractionError("k must be positive")
    host = fan(4 * k)
    view = FanView(4 * k, tuple(range(4 * k)))
    out = []
    for even in (False, True):
        tb = TraceBuilder(host)
        _consecutive(tb, view, k, even)
        out.append(certify(host, tb.trace, cycle(2 * k + 1 + even)))
    return tuple(out)


def _even_spaced(tb: TraceBuilder, view: FanView, k: int) -> FanView:
    """Pivots ``p_2 p_3, p_6 p_7, ..., p_{4k-6} p_{4k-5}`` with deletions.
    Returns the view after the pivots; apex plus its prefix up to the second
    apex neighbour is then ``C_{2k+2}``."""
    idx = view.indices(tb.graph)
    if len(idx) < 2 * k + 1 or idx[: 2 * k] != [2 * j for j in range(2 * k)]:
        raise ExtractionError("spacing precondition violated")
    p = view.path
    for j in range(1, k):
        tb.pv(p[4 * j - 2], p[4 * j - 1])
        tb.delete(p[4 * j - 2], p[4 * j - 1])
    gone = {p[4 * j - 2 + e] for j in range(1, k) for e in (0, 1)}
    return FanView(view.apex, tuple(x for x in p if x not in gone))


def _even_spaced_cycle(tb: TraceBuilder, view: FanView, k: int) -> None:
    v = _even_spaced(tb, view, k)
    second = v.indices(tb.graph)[1]
    tb.keep_only({v.apex, *v.path[: second + 1]})


def even_spaced_fan_to_cycles(gaps, k: int) -> list:
    """Certificates from the evenly spaced fan with the given gaps: always
    ``C_{2k+2}``, plus ``C_{2k+1}`` when the last gap is odd."""
    if k < 1:
        raise ExtractionError("k must be positive")
    host = fan_from_gaps(gaps)
    view = infer_fan(host, apex=host.max_label())
    tb = TraceBuilder(host)
    _even_spaced_cycle(tb, view, k)
    out = [certify(host, tb.trace, cycle(2 * k + 2))]
    if gaps[-1] % 2:
        tb = TraceBuilder(host)
        rest = _even_spaced(tb, view, k)
        _odd_gap(tb, rest)
        out.append(certify(host, tb.trace, cycle(2 * k + 1)))
    return out


# -- (k, l)-fans -------------------------------------------------------------------

def fan_potential(gaps: list[int]) -> tuple[int, int, int]:
    """Leading odd gaps ``k``, total odd gaps ``l`` and ``k + (l-k)//3``."""
    k = 0
    while k < len(gaps) and gaps[k] % 2:
        k += 1
    l = sum(x % 2 for x in gaps)
    return k, l, k + (l - k) // 3


def _kl_reduce(tb: TraceBuilder, view: FanView, m: int) -> FanView:
    """Shrink a fan of potential at least ``m`` until ``F_m`` is induced;
    returns the view of that fan (apex plus ``m`` path vertices)."""
    while True:
        g = tb.graph
        gaps = view.gaps(g)
        k, l, pot = fan_potential(gaps)
        assert pot >= m, "fan potential dropped"
        idx = view.indices(g)
        row = g.row(view.apex)
        pair = next((j for j in range(1, view.n - 1)
                     if not row >> view.path[j] & 1 and not row >> view.path[j + 1] & 1), None)
        if pair is not None:
            view = shrink(tb, view, pair)
            continue
        if l - k < 3:
            keep = view.path[:m]
            tb.keep_only({view.apex, *keep})
            return FanView(view.apex, keep)
        # gap k+1 is 2, so apex neighbours sit at 0..k and k+2
        assert idx[k + 1] == k + 2
        view = shrink(tb, view, k + 2)


def kl_fan_reduce(g: Graph, k: int, l: int, view: FanView | None = None):
    """Pivot-minor certificate for ``F_{k + (l-k)//3}`` from a ``(k, l)``-fan."""
    view = view or infer_fan(g)
    check_view(g, view)
    gaps = view.gaps(g)
    if len(gaps) < k or any(x % 2 == 0 for x in gaps[:k]) or sum(x % 2 for x in gaps) < l:
        raise ExtractionError(f"not a ({k}, {l})-fan")
    m = k + (l - k) // 3
    if m < 1:
        raise ExtractionError("target fan is empty")
    tb = TraceBuilder(g)
    _kl_reduce(tb, view, m)
    return certify(g, tb.trace, fan(m))


# -- incomplete fan to C_k -------------------------------------------------------------

def fan_cycle_needs(k: int) -> tuple[int, bool]:
    """``(k', even)`` with ``C_k = C_{2k'+2}`` if even else ``C_{2k'+1}``."""
    return ((k - 2) // 2, True) if k % 2 == 0 else ((k - 1) // 2, False)


def _to_cycle(tb: TraceBuilder, view: FanView, k: int) -> str | None:
    """Case analysis on the gaps; leaves ``C_k`` in ``tb`` and returns the
    case name, or returns None (with ``tb`` untouched) if no case applies."""
    g = tb.graph
    idx = view.indices(g)
    gaps = [b - a for a, b in zip(idx, idx[1:])]
    long_same = [j for j, x in enumerate(gaps) if x >= k - 2 and (x - k) % 2 == 0]
    if long_same:
        j = long_same[0]
        restrict(tb, view, idx[j], idx[j + 1])
        tb.extend(shorten_to(tb.graph, k).trace)
        return "long gap, same parity"
    long_other = [j for j, x in enumerate(gaps) if x >= k - 2]
    if long_other:
        j = long_other[0]
        later = [m for m in range(j + 1, len(gaps)) if gaps[m] % 2]
        if later:
            sub = restrict(tb, view, idx[j], idx[later[0] + 1])
        else:
            m = max(m for m in range(j) if gaps[m] % 2)
            sub = restrict(tb, view, idx[m], idx[j + 1]).mirrored()
        _odd_gap(tb, sub)
        tb.extend(shorten_to(tb.graph, k).trace)
        return "long gap, other parity"
    kk, even = fan_cycle_needs(k)
    need = 4 * kk
    best = None
    for j, x in enumerate(gaps):
        if x % 2:
            _, _, pot = fan_potential(gaps[j:])
            if pot >= need and (best is None or pot > best[1]):
                best = (j, pot)
    if best is not None:
        sub = restrict(tb, view, idx[best[0]], view.n)
        f = _kl_reduce(tb, sub, need)
        _consecutive(tb, f, kk, even)
        return "many odd gaps"
    run = _even_run(gaps, k - 1)
    if run is not None:
        j = run
        if even:
            end = j + k - 2
            sub = restrict(tb, view, idx[j], idx[end])
            for pos in sub.indices(tb.graph)[:-1]:
                sub = shrink_gap(tb, sub, pos, 2)
            _even_spaced_cycle(tb, sub, kk)
            return "even run"
        # extend the run to the nearest odd gap, mirroring if it lies before
        later = [m for m in range(j + k - 1, len(gaps)) if gaps[m] % 2]
        if later:
            sub = restrict(tb, view, idx[j], idx[later[0] + 1])
        else:
            m = max(m for m in range(j) if gaps[m] % 2)
            sub = restrict(tb, view, idx[m], idx[j + k - 1]).mirrored()
        for pos in sub.indices(tb.graph)[:-2]:
            sub = shrink_gap(tb, sub, pos, 2)
        rest = _even_spaced(tb, sub, kk)
        _odd_gap(tb, rest)
        return "even run, odd end"
    return None


def _even_run(gaps: list[int], length: int) -> int | None:
    for j in range(len(gaps) - length + 1):
        if all(x % 2 == 0 for x in gaps[j:j + length]):
            return j
    return None


def incomplete_fan_to_cycle(g: Graph, k: int, view: FanView | None = None):
    """Pivot-minor certificate for ``C_k`` from an incomplete fan with path
    length ``n = k (mod 2)``, or None when no case of the analysis applies."""
    if k < 3:
        raise ExtractionError("k must be at least 3")
    view = view or infer_fan(g)
    check_view(g, view)
    if (view.n - k) % 2:
        raise ExtractionError("path length and k must have the same parity")
    tb = TraceBuilder(g)
    if _to_cycle(tb, view, k) is None:
        return None
    return certify(g, tb.trace, cycle(k))
