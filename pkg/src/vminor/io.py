"""Text formats: graph6, operation traces, witness certificates.

graph6 carries no labels, so writing a graph emits its vertices in label
order and reading yields labels ``0..n-1``.
"""
from __future__ import annotations

from typing import Iterable

from .graph import OP_ARITY, Graph, GraphError, Op, format_op

HEADER = ">>graph6<<"


class FormatError(GraphError):
    def __init__(self, message: str, offset: int | None = None, line: int | None = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"byte {offset}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)
        self.offset = offset
        self.line = line


def _encode_n(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def to_graph6(g: Graph, header: bool = False) -> str:
    order = g.labels
    n = len(order)
    out = bytearray(_encode_n(n))
    acc = nbits = 0
    for j in range(1, n):
        row = g.row(order[j])
        for i in range(j):
            acc = acc << 1 | (row >> order[i] & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    text = out.decode("ascii")
    return HEADER + text if header else text


def from_graph6(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    s = text.strip()
    base = 0
    if s.startswith(HEADER):
        s = s[len(HEADER):]
        base = len(HEADER)
    data = s.encode("ascii", errors="replace")
    for i, b in enumerate(data):
        if not 63 <= b <= 126:
            raise FormatError(f"invalid graph6 character {chr(b)!r}", base + i)
    if not data:
        raise FormatError("empty graph6 string", base)
    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise FormatError("truncated size field", base + len(data))
        n = 0
        for b in data[2:8]:
            n = n << 6 | (b - 63)
        pos = 8
    else:
        if len(data) < 4:
            raise FormatError("truncated size field", base + len(data))
        n = 0
        for b in data[1:4]:
            n = n << 6 | (b - 63)
        pos = 4
    need = (n * (n - 1) // 2 + 5) // 6
    body = data[pos:]
    if len(body) != need:
        off = base + pos + min(len(body), need)
        raise FormatError(f"expected {need} data bytes for n={n}, got {len(body)}", off)
    adj = {v: 0 for v in range(n)}
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte, shift = divmod(k, 6)
            if (body[byte] - 63) >> (5 - shift) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    total = n * (n - 1) // 2
    if total % 6 and (body[-1] - 63) & ((1 << (6 - total % 6)) - 1):
        raise FormatError("nonzero padding bits", base + pos + need - 1)
    return Graph(adj, _trusted=True)


def edge_list(g: Graph) -> str:
    lines = [f"{g.order} {g.size}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines)


def parse_edge_list(text: str) -> Graph:
    """Inverse of :func:`edge_list`: header ``n m`` then ``m`` lines ``u v``."""
    rows = [ln.split() for ln in text.splitlines() if ln.strip()]
    try:
        vals = [tuple(int(x) for x in r) for r in rows]
    except ValueError:
        raise FormatError("non-integer token in edge list") from None
    if not vals or len(vals[0]) != 2:
        raise FormatError("edge list needs an 'n m' header", line=1)
    n, m = vals[0]
    if len(vals) != m + 1:
        raise FormatError(f"header promises {m} edges, found {len(vals) - 1}")
    for i, e in enumerate(vals[1:], 2):
        if len(e) != 2 or not all(0 <= x < n for x in e):
            raise FormatError("bad edge", line=i)
    try:
        return Graph.from_edges(vals[1:], range(n))
    except GraphError as e:
        raise FormatError(str(e)) from None


# -- traces -------------------------------------------------------------------

def format_trace(trace: Iterable[Op]) -> str:
    return "".join(format_op(op) + "\n" for op in trace)


def parse_trace(text: str) -> tuple[Op, ...]:
    ops = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        kind, *args = line.split()
        kind = kind.lower()
        if kind not in OP_ARITY:
            raise FormatError(f"unknown op {kind!r}", line=lineno)
        if len(args) != OP_ARITY[kind]:
            raise FormatError(f"{kind} takes {OP_ARITY[kind]} operand(s)", line=lineno)
        try:
            vals = tuple(int(a) for a in args)
        except ValueError:
            raise FormatError(f"non-integer operand in {line!r}", line=lineno) from None
        if any(v < 0 for v in vals):
            raise FormatError("negative vertex label", line=lineno)
        ops.append(Op(kind, vals))
    return tuple(ops)


def relabel_trace(trace: Iterable[Op], f: dict[int, int]) -> tuple[Op, ...]:
    return tuple(Op(op.kind, tuple(f[a] for a in op.args)) for op in trace)


def format_certificate(cert) -> str:
    """Serialise a WitnessCertificate: kind comment, host g6, pattern g6, ops.

    The host is written with labels compacted to ``0..n-1`` (graph6 order) and
    the trace is rewritten to match.
    """
    f = {v: i for i, v in enumerate(cert.host.labels)}
    lines = [f"# {cert.kind.value}", to_graph6(cert.host), to_graph6(cert.pattern)]
    return "\n".join(lines) + "\n" + format_trace(relabel_trace(cert.trace, f))


def parse_certificate(text: str):
    from .search import Kind, WitnessCertificate

    kind = None
    body = []
    for raw in text.splitlines():
        s = raw.strip()
        if s.startswith("#"):
            tag = s[1:].strip()
            if kind is None and tag in {k.value for k in Kind}:
                kind = Kind(tag)
            continue
        if s:
            body.append(s)
    if len(body) < 2:
        raise FormatError("certificate needs host and pattern lines")
    host, pattern = from_graph6(body[0]), from_graph6(body[1])
    trace = parse_trace("\n".join(body[2:]))
    if kind is None:
        kind = Kind.PIVOT if all(op.kind in ("pv", "del") for op in trace) else Kind.VERTEX
    return WitnessCertificate(kind, host, pattern, trace)


__all__ = [
    "FormatError", "to_graph6", "from_graph6", "edge_list", "format_trace",
    "parse_trace", "relabel_trace", "format_certificate", "parse_certificate",
]
