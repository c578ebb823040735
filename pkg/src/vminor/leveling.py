"""BFS levelings, exact colouring and clique solvers, and the small
combinatorial dichotomies (monotone subsequences, degree-or-path,
clique-or-independent-set, induced paths) used by the extraction pipelines.
"""
from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field
from typing import Sequence

from .graph import Graph, GraphError, bits, is_connected, mask_of, popcount

CHI_CAP = 20
OMEGA_CAP = 40


# -- levelings -------------------------------------------------------------------

@dataclass(frozen=True)
class Leveling:
    levels: tuple[tuple[int, ...], ...]
    depth: dict = field(compare=False, repr=False)

    @property
    def root(self) -> int:
        return self.levels[0][0]

    def level_of(self, v: int) -> int:
        try:
            return self.depth[v]
        except KeyError:
            raise GraphError(f"vertex {v} is not in the leveling") from None

    def __len__(self) -> int:
        return len(self.levels)


def build_leveling(g: Graph, root: int) -> Leveling:
    """Distance classes from ``root`` (restricted to its component)."""
    if root not in g:
        raise GraphError(f"unknown vertex {root}")
    depth = {root: 0}
    levels = [(root,)]
    seen = 1 << root
    frontier = seen
    while True:
        nxt = 0
        for a in bits(frontier):
            nxt |= g.row(a)
        nxt &= ~seen
        if not nxt:
            break
        layer = tuple(bits(nxt))
        for v in layer:
            depth[v] = len(levels)
        levels.append(layer)
        seen |= nxt
        frontier = nxt
    return Leveling(tuple(levels), depth)


def check_leveling(g: Graph, lv: Leveling) -> bool:
    if len(lv.levels[0]) != 1:
        return False
    masks = [mask_of(level) for level in lv.levels]
    for i, level in enumerate(lv.levels[1:], 1):
        below = 0
        for m in masks[: i - 1]:
            below |= m
        for v in level:
            if not g.row(v) & masks[i - 1] or g.row(v) & below:
                return False
    return True


def parents(g: Graph, lv: Leveling, v: int) -> list[int]:
    i = lv.level_of(v)
    if i == 0:
        return []
    return list(bits(g.row(v) & mask_of(lv.levels[i - 1])))


def ancestor_masks(g: Graph, lv: Leveling) -> dict[int, int]:
    """For each vertex, the bitmask of its ancestors (itself included)."""
    anc = {lv.root: 1 << lv.root}
    for i in range(1, len(lv.levels)):
        up = mask_of(lv.levels[i - 1])
        for v in lv.levels[i]:
            m = 1 << v
            for p in bits(g.row(v) & up):
                m |= anc[p]
            anc[v] = m
    return anc


def is_ancestor(g: Graph, lv: Leveling, u: int, v: int) -> bool:
    """True iff ``u`` is an ancestor of ``v`` (a vertex is its own ancestor)."""
    lv.level_of(u)
    return bool(ancestor_masks(g, lv)[v] >> u & 1)


def first_common_ancestor(g: Graph, lv: Leveling, u: int, v: int) -> int:
    """Deepest common ancestor; ties go to the lowest label."""
    anc = ancestor_masks(g, lv)
    common = anc[u] & anc[v]
    return max(bits(common), key=lambda a: (lv.depth[a], -a))


def ancestor_path(g: Graph, lv: Leveling, top: int, v: int) -> list[int]:
    """A path ``v, parent, ..., top`` through consecutive levels; lowest
    labels first.  ``top`` must be an ancestor of ``v``."""
    anc = ancestor_masks(g, lv)
    if not anc[v] >> top & 1:
        raise GraphError(f"{top} is not an ancestor of {v}")
    out = [v]
    while out[-1] != top:
        cur = out[-1]
        up = mask_of(lv.levels[lv.depth[cur] - 1])
        out.append(next(p for p in bits(g.row(cur) & up) if anc[p] >> top & 1))
    return out


# -- exact solvers ----------------------------------------------------------------

def clique_number(g: Graph, cap: int = OMEGA_CAP) -> int:
    return len(max_clique(g, cap))


def max_clique(g: Graph, cap: int = OMEGA_CAP, within: int | None = None) -> list[int]:
    """Maximum clique by bitset branch and bound with a greedy-colouring bound."""
    if g.order > cap:
        raise GraphError(f"clique solver capped at {cap} vertices")
    cand = g.vertex_mask if within is None else within
    best: list[int] = []

    def colour_bound(p: int) -> list[tuple[int, int]]:
        # order vertices by greedy colour class; returns (vertex, colour#)
        out, c, rest = [], 0, p
        while rest:
            c += 1
            avail = rest
            while avail:
                v = (avail & -avail).bit_length() - 1
                avail &= ~g.row(v) & ~(1 << v)
                rest &= ~(1 << v)
                out.append((v, c))
        return out

    def expand(r: list[int], p: int) -> None:
        nonlocal best
        order = colour_bound(p)
        for v, c in reversed(order):
            if len(r) + c <= len(best):
                return
            r.append(v)
            np_ = p & g.row(v)
            if np_:
                expand(r, np_)
            elif len(r) > len(best):
                best = list(r)
            r.pop()
            p &= ~(1 << v)

    if cand:
        expand([], cand)
    return sorted(best)


def max_independent_set(g: Graph, within: int | None = None) -> list[int]:
    cand = g.vertex_mask if within is None else within
    full = cand
    comp = Graph({v: ~g.row(v) & full & ~(1 << v) for v in bits(full)}, _trusted=True)
    return max_clique(comp, cap=max(OMEGA_CAP, comp.order))


def chromatic_number(g: Graph, cap: int = CHI_CAP) -> int:
    return len(set(exact_coloring(g, cap).values()))


def exact_coloring(g: Graph, cap: int = CHI_CAP) -> dict[int, int]:
    """Optimal proper colouring via DSATUR branch and bound."""
    if g.order > cap:
        raise GraphError(f"colouring solver capped at {cap} vertices")
    if g.order == 0:
        return {}
    lower = clique_number(g)
    best = dsatur(g)
    best_k = len(set(best.values()))
    if best_k == lower:
        return best
    colour: dict[int, int] = {}

    def pick() -> int:
        def key(v):
            sat = {colour[w] for w in bits(g.row(v)) if w in colour}
            return (len(sat), g.degree(v), -v)
        return max((v for v in g.labels if v not in colour), key=key)

    def search(used: int) -> None:
        nonlocal best, best_k
        if used >= best_k:
            return
        if len(colour) == g.order:
            best, best_k = dict(colour), used
            return
        v = pick()
        taken = {colour[w] for w in bits(g.row(v)) if w in colour}
        for c in range(min(used + 1, best_k - 1)):
            if c in taken:
                continue
            colour[v] = c
            search(max(used, c + 1))
            del colour[v]
            if best_k == lower:
                return

    search(0)
    return best


def dsatur(g: Graph) -> dict[int, int]:
    colour: dict[int, int] = {}
    for _ in range(g.order):
        v = max(
            (v for v in g.labels if v not in colour),
            key=lambda v: (len({colour[w] for w in bits(g.row(v)) if w in colour}), g.degree(v), -v),
        )
        taken = {colour[w] for w in bits(g.row(v)) if w in colour}
        colour[v] = next(c for c in range(g.order) if c not in taken)
    return colour


def is_proper(g: Graph, colour: dict[int, int]) -> bool:
    return all(colour[u] != colour[v] for u, v in g.edges())


def level_parity_color(g: Graph, lv: Leveling, per_level: Sequence[dict[int, int]]) -> dict[int, int]:
    """Combine per-level colourings with disjoint palettes for odd and even
    levels.  Edges only join equal or consecutive levels, so the result is
    proper with at most twice the largest per-level palette."""
    n_colours = 1 + max((c for col in per_level for c in col.values()), default=-1)
    out = {}
    for i, (level, col) in enumerate(zip(lv.levels, per_level)):
        sub = Graph({v: g.row(v) & mask_of(level) for v in level}, _trusted=True)
        if set(col) != set(level) or not is_proper(sub, col):
            raise GraphError(f"colouring of level {i} is not proper")
        for v in level:
            out[v] = col[v] + (i % 2) * n_colours
    assert len(out) != g.order or is_proper(g, out)
    return out


# -- dichotomies ------------------------------------------------------------------

@dataclass(frozen=True)
class Monotone:
    indices: list[int]
    increasing: bool
    ok: bool


def monotone_subsequence(seq: Sequence[int], n: int) -> Monotone:
    """Indices of a non-decreasing or strictly decreasing subsequence of
    length ``n + 1``.  With fewer than ``n^2 + 1`` terms the longest one of
    either kind is returned and ``ok`` says whether it reached ``n + 1``."""
    inc = _longest(seq, lambda a: a, strict=False)
    dec = _longest(seq, lambda a: -a, strict=True)
    want = n + 1
    if len(inc) >= want:
        return Monotone(inc[:want], True, True)
    if len(dec) >= want:
        return Monotone(dec[:want], False, True)
    best = inc if len(inc) >= len(dec) else dec
    return Monotone(best, best is inc, False)


def _longest(seq, key, strict: bool) -> list[int]:
    tails: list = []
    tail_idx: list[int] = []
    prev = [-1] * len(seq)
    find = bisect_left if strict else bisect_right
    for i, a in enumerate(seq):
        x = key(a)
        j = find(tails, x)
        if j == len(tails):
            tails.append(x)
            tail_idx.append(i)
        else:
            tails[j] = x
            tail_idx[j] = i
        prev[i] = tail_idx[j - 1] if j else -1
    out, i = [], tail_idx[-1] if tail_idx else -1
    while i != -1:
        out.append(i)
        i = prev[i]
    return out[::-1]


@dataclass(frozen=True)
class Found:
    """Tagged result of a dichotomy search: ``tag`` names the branch."""

    tag: str
    value: object = None


def clique_or_independent(g: Graph, a: int, b: int, within: int | None = None) -> Found:
    cl = max_clique(g, cap=max(OMEGA_CAP, g.order), within=within)
    if len(cl) >= a:
        return Found("clique", cl[:a])
    ind = max_independent_set(g, within=within)
    if len(ind) >= b:
        return Found("independent", ind[:b])
    return Found("neither")


@dataclass(frozen=True)
class PathSearch:
    path: list[int] | None
    complete: bool  # False if the budget ran out before a definitive answer


def find_induced_path(g: Graph, ell: int, budget: int = 200_000, within: int | None = None) -> PathSearch:
    """Induced path on ``ell`` vertices by DFS over extensions, lowest labels first."""
    cand = g.vertex_mask if within is None else within
    if ell <= 0:
        return PathSearch([], True)
    nodes = 0

    def grow(path: list[int], blocked: int) -> list[int] | None:
        nonlocal nodes
        if len(path) == ell:
            return path
        nodes += 1
        if nodes > budget:
            raise _Budget
        end = path[-1]
        for w in bits(g.row(end) & cand & ~blocked):
            r = grow(path + [w], blocked | g.row(end) | (1 << end))
            if r:
                return r
        return None

    try:
        for s in bits(cand):
            r = grow([s], 1 << s)
            if r:
                return PathSearch(r, True)
    except _Budget:
        return PathSearch(None, False)
    return PathSearch(None, True)


def longest_induced_path(g: Graph, budget: int = 200_000, within: int | None = None, cap: int | None = None) -> PathSearch:
    """Longest induced path found (exact if ``complete``)."""
    cand = g.vertex_mask if within is None else within
    best: list[int] = []
    complete = True
    top = popcount(cand) if cap is None else min(cap, popcount(cand))
    for ell in range(1, top + 1):
        r = find_induced_path(g, ell, budget, within=cand)
        if r.path is None:
            complete = r.complete
            break
        best = r.path
    return PathSearch(best, complete)


class _Budget(Exception):
    pass


def degree_or_path(g: Graph, k: int, ell: int, budget: int = 200_000) -> Found:
    if not is_connected(g):
        raise GraphError("degree_or_path needs a connected graph")
    if g.order:
        v = max(g.labels, key=lambda v: (g.degree(v), -v))
        if g.degree(v) >= k:
            return Found("degree", v)
    r = find_induced_path(g, ell, budget)
    if r.path is not None:
        return Found("path", r.path)
    if r.complete:
        assert g.order <= k ** (ell - 2), "dichotomy violated"
    return Found("notfound", r.complete)
