"""Certificate-producing tools for {P5, co-P5}-free graphs."""

from .graph import CapabilityError, Graph, GraphError, complement, graph_from_edges
from .iso import are_isomorphic, canonical_form

__version__ = "0.1.0"

__all__ = [
    "CapabilityError",
    "Graph",
    "GraphError",
    "are_isomorphic",
    "canonical_form",
    "complement",
    "graph_from_edges",
]
