"""Named graph families with documented, deterministic labellings.

Labelling conventions (relied on by the extraction code and its tests):

* ``path(n)``: ``0-1-...-(n-1)``.
* ``cycle(n)``: ``0-1-...-(n-1)-0``.
* ``fan(k)``: path ``0..k-1`` plus hub ``k``.
* ``incomplete_fan(n, S)``: path ``p_0..p_n`` on labels ``0..n``, apex ``n+1``
  adjacent to ``p_i`` for ``i`` in ``S``.
* ``ladder(t)``: rails ``p_i = i`` and ``q_i = t+i`` (``i < t``), rungs ``p_i q_i``.
* ``one_subdivision(g)``: original labels kept; the vertex subdividing edge
  ``e`` gets label ``max+1+j`` where ``j`` is the index of ``e`` in
  ``g.edges()`` order.
* ``ek(k)``: main path ``y_i = i``, middle vertices ``x_i = k+i``, leaves
  ``w_i = 2k+i`` with ``y_i - x_i - w_i``.
* ``star(n)``: leaves ``0..n-1``, centre ``n``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .graph import Graph, GraphError, is_connected


def path(n: int) -> Graph:
    if n < 0:
        raise GraphError("path needs n >= 0")
    return Graph.from_edges([(i, i + 1) for i in range(n - 1)], range(n))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph.from_edges([(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 0:
        raise GraphError("complete needs n >= 0")
    return Graph.from_edges([(i, j) for i in range(n) for j in range(i + 1, n)], range(n))


def star(n: int) -> Graph:
    if n < 1:
        raise GraphError("star needs n >= 1")
    return Graph.from_edges([(i, n) for i in range(n)])


def fan(k: int) -> Graph:
    if k < 1:
        raise GraphError("fan needs k >= 1")
    return incomplete_fan(k - 1, range(k)) if k > 1 else Graph.from_edges([(0, 1)])


def incomplete_fan(n: int, apex_neighbors: Iterable[int]) -> Graph:
    """Path ``p_0..p_n`` with an apex (label ``n+1``) on the given indices."""
    s = sorted(set(apex_neighbors))
    if n < 0 or 0 not in s or n not in s:
        raise GraphError("apex must be adjacent to both path ends")
    if s[0] < 0 or s[-1] > n:
        raise GraphError("apex neighbour index out of range")
    edges = [(i, i + 1) for i in range(n)] + [(i, n + 1) for i in s]
    return Graph.from_edges(edges, range(n + 2))


def fan_from_gaps(gaps: Sequence[int]) -> Graph:
    """Incomplete fan whose consecutive apex neighbours are ``gaps`` apart."""
    if not gaps or any(g < 1 for g in gaps):
        raise GraphError("gaps must be positive")
    idx = [0]
    for g in gaps:
        idx.append(idx[-1] + g)
    return incomplete_fan(idx[-1], idx)


def kl_fan(k: int, gaps: Sequence[int], l: int | None = None) -> Graph:
    """A (k, l)-fan: the first ``k`` gaps odd and at least ``l`` odd gaps."""
    odd = sum(g % 2 for g in gaps)
    if len(gaps) < k or any(g % 2 == 0 for g in gaps[:k]):
        raise GraphError("first k gaps must be odd")
    if l is not None and odd < l:
        raise GraphError(f"only {odd} odd gaps, need {l}")
    return fan_from_gaps(gaps)


def ladder(t: int) -> Graph:
    if t < 1:
        raise GraphError("ladder needs t >= 1")
    edges = [(i, i + 1) for i in range(t - 1)]
    edges += [(t + i, t + i + 1) for i in range(t - 1)]
    edges += [(i, t + i) for i in range(t)]
    return Graph.from_edges(edges, range(2 * t))


def one_subdivision(g: Graph) -> tuple[Graph, dict[tuple[int, int], int]]:
    """Replace each edge by a 2-edge path.  Returns the graph and a map from
    each original edge ``(u, v)`` (``u < v``) to its subdivision vertex."""
    base = g.max_label() + 1
    sub = {}
    edges = []
    for j, (u, v) in enumerate(g.edges()):
        w = base + j
        sub[(u, v)] = w
        edges += [(u, w), (w, v)]
    return Graph.from_edges(edges, g.labels), sub


def ek(k: int) -> Graph:
    if k < 2:
        raise GraphError("E_k needs k >= 2")
    edges = [(i, i + 1) for i in range(k - 1)]
    edges += [(i, k + i) for i in range(k)]
    edges += [(k + i, 2 * k + i) for i in range(k)]
    return Graph.from_edges(edges)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return Graph.from_edges(outer + inner + spokes)


def disjoint_union(*gs: Graph) -> Graph:
    edges, verts, off = [], [], 0
    for g in gs:
        f = {v: off + i for i, v in enumerate(g.labels)}
        verts += f.values()
        edges += [(f[u], f[v]) for u, v in g.edges()]
        off += g.order
    return Graph.from_edges(edges, verts)


def random_graph(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    return Graph.from_edges(
        [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p], range(n)
    )


def random_connected(n: int, p: float, seed: int) -> Graph:
    """Erdős–Rényi ``G(n, p)`` united with a random spanning tree."""
    if n < 1:
        raise GraphError("random_connected needs n >= 1")
    if not 0 < p <= 1:
        raise GraphError("edge density must lie in (0, 1]")
    rng = random.Random(seed)
    perm = list(range(n))
    rng.shuffle(perm)
    edges = {tuple(sorted((perm[i], perm[rng.randrange(i)]))) for i in range(1, n)}
    edges |= {(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p}
    g = Graph.from_edges(sorted(edges), range(n))
    assert is_connected(g)
    return g


def random_tree(n: int, seed: int) -> Graph:
    rng = random.Random(seed)
    return Graph.from_edges([(i, rng.randrange(i)) for i in range(1, n)], range(n))


def random_bipartite_connected(a: int, b: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    left, right = list(range(a)), list(range(a, a + b))
    edges = set()
    # spanning tree alternating sides keeps the graph connected and bipartite
    order = [(0, v) for v in left] + [(1, v) for v in right]
    rng.shuffle(order)
    seen = {0: [], 1: []}
    first = order[0]
    seen[first[0]].append(first[1])
    pending = order[1:]
    while pending:
        for i, (side, v) in enumerate(pending):
            if seen[1 - side]:
                edges.add(tuple(sorted((v, rng.choice(seen[1 - side])))))
                seen[side].append(v)
                del pending[i]
                break
    edges |= {(u, v) for u in left for v in right if rng.random() < p}
    return Graph.from_edges(sorted(edges), range(a + b))


def random_kl_fan(k: int, l: int, max_gap: int, rng: random.Random, extra: int = 2) -> tuple[Graph, list[int]]:
    """Random (k, l)-fan with gaps in ``1..max_gap``; returns graph and gaps."""
    odd = [g for g in range(1, max_gap + 1) if g % 2]
    gaps = [rng.choice(odd) for _ in range(k)]
    while sum(g % 2 for g in gaps) < l:
        gaps.append(rng.randint(1, max_gap))
    gaps += [rng.randint(1, max_gap) for _ in range(rng.randint(0, extra))]
    return kl_fan(k, gaps, l), gaps


@dataclass(frozen=True)
class FamilySpec:
    """A named family plus its parameters, e.g. ``FamilySpec("cycle", (5,))``."""

    family: str
    params: tuple = field(default_factory=tuple)


FAMILIES = {
    "path": lambda n: path(n),
    "cycle": lambda n: cycle(n),
    "fan": lambda k: fan(k),
    "ladder": lambda t: ladder(t),
    "subdivided-ladder": lambda t: one_subdivision(ladder(t))[0],
    "ek": lambda k: ek(k),
    "star": lambda n: star(n),
    "complete": lambda n: complete(n),
    "petersen": lambda: petersen(),
}


def make(spec: FamilySpec) -> Graph:
    fam, params = spec.family, spec.params
    if fam == "one-subdivision":
        (inner,) = params
        return one_subdivision(make(inner))[0]
    if fam == "incomplete-fan":
        n, s = params
        return incomplete_fan(n, s)
    if fam == "kl-fan":
        k, gaps = params[0], params[1]
        return kl_fan(k, gaps, *params[2:])
    if fam == "random":
        return random_connected(*params)
    if fam not in FAMILIES:
        raise GraphError(f"unknown family {fam!r}")
    try:
        return FAMILIES[fam](*params)
    except TypeError as e:
        raise GraphError(f"bad parameters for {fam}: {e}") from None
