"""Facet enumeration of cut polytopes of graphs."""

from ._core import (
    GraphError,
    ModelError,
    ResourceError,
    cuts,
    enumerate_facets,
    graph_info,
    is_facet,
    k5free_count,
    k5free_facets,
    metric_inequalities,
    metric_vertices,
    sample,
    triangle_adjacency,
    triangle_inequalities,
)

__all__ = [
    "GraphError",
    "ModelError",
    "ResourceError",
    "cuts",
    "enumerate_facets",
    "graph_info",
    "is_facet",
    "k5free_count",
    "k5free_facets",
    "metric_inequalities",
    "metric_vertices",
    "sample",
    "triangle_adjacency",
    "triangle_inequalities",
]
