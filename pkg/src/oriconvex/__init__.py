"""Geodesic convexity in oriented graphs.

Convex hulls and exact convexity numbers of oriented graphs, whirlpool and
block orientations of grids realizing prescribed convexity numbers, strong
convexity spectra by exhaustive orientation enumeration, and a Clique
hardness-reduction instance generator - every construction certified by an
independent exact solver.
"""

from .digraph import (
    INF,
    IntervalTable,
    OrientedGraph,
    classify_vertex,
    directed_girth,
    distances,
    hull,
    in_boundary,
    interval_table,
    is_convex,
    is_strong,
    is_strong_on,
    out_boundary,
    reverse,
)
from .grids import (
    GridOrientation,
    GridSpec,
    PathSpec,
    grid,
    parse_ascii,
    render_ascii,
    to_pathspec,
    whirlpool,
)
from .solver import (
    CertificationError,
    ConvexityCertificate,
    certify,
    convexity_number,
    max_convex_at_least,
    near_order_checks,
)
from .undirected import UndirectedGraph

__all__ = [
    "INF",
    "CertificationError",
    "ConvexityCertificate",
    "GridOrientation",
    "GridSpec",
    "IntervalTable",
    "OrientedGraph",
    "PathSpec",
    "UndirectedGraph",
    "certify",
    "classify_vertex",
    "convexity_number",
    "directed_girth",
    "distances",
    "grid",
    "hull",
    "in_boundary",
    "interval_table",
    "is_convex",
    "is_strong",
    "is_strong_on",
    "max_convex_at_least",
    "near_order_checks",
    "out_boundary",
    "parse_ascii",
    "render_ascii",
    "reverse",
    "to_pathspec",
    "whirlpool",
]

__version__ = "0.1.0"
