"""Vertex-minors and pivot-minors of small graphs: operations, containment
search with replayable certificates, and constructive extractions of fans
and cycles."""
from .canon import canonical_form, is_isomorphic
from .graph import (
    Graph, GraphError, Op, TraceBuilder, TraceError, apply_trace, delete_vertex,
    local_complement, pivot, smooth,
)
from .io import from_graph6, parse_trace, to_graph6
from .search import Kind, WitnessCertificate, is_pivot_minor, is_vertex_minor, verify_witness

__version__ = "0.1.0"
