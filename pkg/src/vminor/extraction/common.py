"""Shared helpers for the constructive extractors."""
from __future__ import annotations

from dataclasses import dataclass, field

from ..canon import is_isomorphic
from ..graph import Graph, GraphError, Op, TraceBuilder, apply_trace, is_connected
from ..search import Kind, WitnessCertificate, verify_witness


class ExtractionError(GraphError):
    """Input violates an extractor's precondition."""


@dataclass(frozen=True)
class HighDegree:
    """A vertex of ``S`` with at least ``k`` neighbours on the path."""

    vertex: int
    neighbors: tuple[int, ...]


@dataclass
class Outcome:
    """Result of a pipeline: a certificate (or None) plus a step log."""

    certificate: WitnessCertificate | None
    notes: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.certificate is not None


def kind_of(trace: tuple[Op, ...]) -> Kind:
    return Kind.PIVOT if all(op.kind in ("pv", "del") for op in trace) else Kind.VERTEX


def certify(host: Graph, trace, pattern: Graph, kind: Kind | None = None) -> WitnessCertificate:
    """Wrap a trace as a certificate and check it before handing it out."""
    trace = tuple(trace)
    cert = WitnessCertificate(kind or kind_of(trace), host, pattern, trace)
    v = verify_witness(cert)
    if not v:
        raise AssertionError(f"extractor produced a bad certificate: {v.reason}")
    return cert


def matches(tb: TraceBuilder, pattern: Graph) -> bool:
    return is_isomorphic(tb.graph, pattern)


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise ExtractionError("graph must be connected")


def replay(host: Graph, trace) -> Graph:
    return apply_trace(host, trace)
