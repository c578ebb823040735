"""Immutable simple graphs over stable integer labels.

Adjacency rows are Python ints used as bitsets: bit ``j`` of ``row(i)`` is set
iff ``i`` and ``j`` are adjacent.  Labels are never renumbered, so an
operation trace recorded against one graph stays meaningful as vertices are
deleted.  Because Python ints are unbounded the 64-vertex word size is a
performance sweet spot rather than a hard cap.
"""
from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple, Sequence


class GraphError(ValueError):
    pass


class TraceError(GraphError):
    """A trace op violated its precondition; ``index`` is the op position."""

    def __init__(self, index: int, op: "Op", reason: str):
        super().__init__(f"op {index} ({format_op(op)}): {reason}")
        self.index = index
        self.op = op
        self.reason = reason


def bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def mask_of(labels: Iterable[int]) -> int:
    m = 0
    for v in labels:
        m |= 1 << v
    return m


class Graph:
    __slots__ = ("_adj", "_vmask", "_hash")

    def __init__(self, adj: dict[int, int] | None = None, *, _trusted: bool = False):
        adj = dict(adj or {})
        vmask = mask_of(adj)
        if not _trusted:
            for v, row in adj.items():
                if v < 0:
                    raise GraphError(f"negative label {v}")
                if row >> v & 1:
                    raise GraphError(f"loop at {v}")
                if row & ~vmask:
                    raise GraphError(f"row {v} references a dead label")
                for w in bits(row):
                    if not adj[w] >> v & 1:
                        raise GraphError(f"asymmetric adjacency {v}-{w}")
        self._adj = adj
        self._vmask = vmask
        self._hash = None

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]], vertices: Iterable[int] = ()) -> "Graph":
        adj: dict[int, int] = {v: 0 for v in vertices}
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at {u}")
            adj[u] = adj.get(u, 0) | 1 << v
            adj[v] = adj.get(v, 0) | 1 << u
        return cls(adj, _trusted=True)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls({v: 0 for v in range(n)}, _trusted=True)

    # basic queries

    @property
    def labels(self) -> tuple[int, ...]:
        return tuple(sorted(self._adj))

    @property
    def vertex_mask(self) -> int:
        return self._vmask

    @property
    def order(self) -> int:
        return len(self._adj)

    @property
    def size(self) -> int:
        return sum(popcount(r) for r in self._adj.values()) // 2

    def __len__(self) -> int:
        return len(self._adj)

    def __contains__(self, v: int) -> bool:
        return v in self._adj

    def __iter__(self) -> Iterator[int]:
        return iter(self.labels)

    def row(self, v: int) -> int:
        try:
            return self._adj[v]
        except KeyError:
            raise GraphError(f"unknown vertex {v}") from None

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.row(v)))

    def degree(self, v: int) -> int:
        return popcount(self.row(v))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.row(u) >> v & 1) if v in self._adj else False

    def edges(self) -> list[tuple[int, int]]:
        return [(u, w) for u in self.labels for w in bits(self._adj[u] >> (u + 1) << (u + 1))]

    def adjacency(self) -> dict[int, int]:
        return dict(self._adj)

    def max_label(self) -> int:
        return max(self._adj) if self._adj else -1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._adj.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(V={list(self.labels)}, E={self.edges()})"


def _require(g: Graph, *vs: int) -> None:
    for v in vs:
        if v not in g:
            raise GraphError(f"unknown vertex {v}")


def local_complement(g: Graph, v: int) -> Graph:
    """``g * v``: complement the subgraph induced on the neighbourhood of ``v``."""
    _require(g, v)
    adj = g.adjacency()
    nv = adj[v]
    for a in bits(nv):
        adj[a] ^= nv & ~(1 << a)
    return Graph(adj, _trusted=True)


def pivot(g: Graph, u: int, v: int) -> Graph:
    """``g ∧ uv = g * u * v * u``."""
    _require(g, u, v)
    if not g.has_edge(u, v):
        raise GraphError("pivot requires an edge")
    return local_complement(local_complement(local_complement(g, u), v), u)


def pivot_by_classes(g: Graph, u: int, v: int) -> Graph:
    """Pivot computed by toggling adjacency between the three classes of
    neighbours of ``u`` and ``v`` and then swapping the labels ``u`` and ``v``.
    Must agree with :func:`pivot` exactly."""
    _require(g, u, v)
    if not g.has_edge(u, v):
        raise GraphError("pivot requires an edge")
    nu, nv = g.row(u), g.row(v)
    bu, bv = 1 << u, 1 << v
    s1 = nu & ~nv & ~bv
    s2 = nv & ~nu & ~bu
    s3 = nu & nv
    adj = g.adjacency()
    for a in bits(s1):
        adj[a] ^= s2 | s3
    for a in bits(s2):
        adj[a] ^= s1 | s3
    for a in bits(s3):
        adj[a] ^= s1 | s2
    return relabel(Graph(adj, _trusted=True), {u: v, v: u})


def delete_vertex(g: Graph, v: int) -> Graph:
    _require(g, v)
    adj = g.adjacency()
    del adj[v]
    keep = ~(1 << v)
    for a in bits(g.row(v)):
        adj[a] &= keep
    return Graph(adj, _trusted=True)


def delete_vertices(g: Graph, vs: Iterable[int]) -> Graph:
    vs = set(vs)
    _require(g, *vs)
    return induced_subgraph(g, [v for v in g.labels if v not in vs])


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    s = list(s)
    _require(g, *s)
    m = mask_of(s)
    return Graph({v: g.row(v) & m for v in s}, _trusted=True)


def is_smoothable(g: Graph, v: int) -> bool:
    _require(g, v)
    nb = g.neighbors(v)
    return len(nb) == 2 and not g.has_edge(*nb)


def smooth(g: Graph, v: int) -> Graph:
    """Remove a degree-2 vertex with non-adjacent neighbours and join them."""
    if not is_smoothable(g, v):
        raise GraphError("not smoothable")
    a, b = g.neighbors(v)
    adj = g.adjacency()
    del adj[v]
    adj[a] = (adj[a] & ~(1 << v)) | 1 << b
    adj[b] = (adj[b] & ~(1 << v)) | 1 << a
    return Graph(adj, _trusted=True)


def relabel(g: Graph, mapping: dict[int, int]) -> Graph:
    """Rename vertices; labels missing from ``mapping`` keep their name."""
    f = {v: mapping.get(v, v) for v in g.labels}
    if len(set(f.values())) != len(f):
        raise GraphError("relabelling is not injective")
    return Graph({f[v]: mask_of(f[w] for w in bits(g.row(v))) for v in g.labels}, _trusted=True)


def compact(g: Graph) -> tuple[Graph, dict[int, int]]:
    """Relabel to ``0..n-1`` in label order; returns the graph and old->new map."""
    f = {v: i for i, v in enumerate(g.labels)}
    return relabel(g, f), f


def component_mask(g: Graph, start: int, within: int | None = None) -> int:
    within = g.vertex_mask if within is None else within
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for a in bits(frontier):
            nxt |= g.row(a)
        nxt &= within & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def is_connected(g: Graph) -> bool:
    """The empty graph and K_1 count as connected."""
    if g.order <= 1:
        return True
    return component_mask(g, g.labels[0]) == g.vertex_mask


def components(g: Graph) -> list[list[int]]:
    left = g.vertex_mask
    out = []
    while left:
        start = (left & -left).bit_length() - 1
        c = component_mask(g, start, left)
        out.append(list(bits(c)))
        left &= ~c
    return out


def is_bipartite(g: Graph) -> bool:
    return two_coloring(g) is not None


def two_coloring(g: Graph) -> dict[int, int] | None:
    color: dict[int, int] = {}
    for s in g.labels:
        if s in color:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            a = stack.pop()
            for b in bits(g.row(a)):
                if b not in color:
                    color[b] = 1 - color[a]
                    stack.append(b)
                elif color[b] == color[a]:
                    return None
    return color


def is_induced_path(g: Graph, seq: Sequence[int]) -> bool:
    """True iff ``seq`` (in order) induces a path in ``g``."""
    if len(set(seq)) != len(seq) or any(v not in g for v in seq):
        return False
    m = mask_of(seq)
    for i, v in enumerate(seq):
        want = {seq[j] for j in (i - 1, i + 1) if 0 <= j < len(seq)}
        if set(bits(g.row(v) & m)) != want:
            return False
    return True


# -- primitive ops and traces ------------------------------------------------

class Op(NamedTuple):
    kind: str  # "lc", "pv", "del", "sm"
    args: tuple[int, ...]


def LC(v: int) -> Op:
    return Op("lc", (v,))


def PV(u: int, v: int) -> Op:
    return Op("pv", (u, v))


def DEL(v: int) -> Op:
    return Op("del", (v,))


def SM(v: int) -> Op:
    return Op("sm", (v,))


OP_ARITY = {"lc": 1, "pv": 2, "del": 1, "sm": 1}


def format_op(op: Op) -> str:
    return " ".join([op.kind, *map(str, op.args)])


def apply_op(g: Graph, op: Op) -> Graph:
    if op.kind == "lc":
        return local_complement(g, *op.args)
    if op.kind == "pv":
        return pivot(g, *op.args)
    if op.kind == "del":
        return delete_vertex(g, *op.args)
    if op.kind == "sm":
        return smooth(g, *op.args)
    raise GraphError(f"unknown op kind {op.kind!r}")


def apply_trace(g: Graph, trace: Iterable[Op]) -> Graph:
    for i, op in enumerate(trace):
        try:
            g = apply_op(g, op)
        except GraphError as e:
            raise TraceError(i, op, str(e)) from None
    return g


class TraceBuilder:
    """Applies ops to a working graph while recording them."""

    def __init__(self, g: Graph):
        self.start = g
        self.graph = g
        self.ops: list[Op] = []

    def do(self, op: Op) -> Graph:
        self.graph = apply_op(self.graph, op)
        self.ops.append(op)
        return self.graph

    def lc(self, v: int) -> Graph:
        return self.do(LC(v))

    def pv(self, u: int, v: int) -> Graph:
        return self.do(PV(u, v))

    def delete(self, *vs: int) -> Graph:
        for v in vs:
            self.do(DEL(v))
        return self.graph

    def sm(self, v: int) -> Graph:
        return self.do(SM(v))

    def keep_only(self, keep: Iterable[int]) -> Graph:
        keep = set(keep)
        return self.delete(*[v for v in self.graph.labels if v not in keep])

    def extend(self, ops: Iterable[Op]) -> Graph:
        for op in ops:
            self.do(op)
        return self.graph

    @property
    def trace(self) -> tuple[Op, ...]:
        return tuple(self.ops)
