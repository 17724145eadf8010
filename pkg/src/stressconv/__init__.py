"""Stress intervals, stress convexity and the invariants built on them."""

from .apsp import UNREACHABLE, ApspTables, compute_apsp, vertex_stress
from .graph import (
    Graph,
    GraphError,
    ParseError,
    VertexSet,
    articulation_points,
    connected_components,
    induced_subgraph,
    parse_edge_list,
    remove_vertex,
)
from .stress import (
    StressTable,
    all_stress_intervals,
    extreme_vertices,
    geodesic_interval,
    is_stress_convex,
    is_stress_set,
    stress_closure,
    stress_hull,
    stress_interval,
    stress_interval_via_cut_vertices,
)

__version__ = "0.1.0"
