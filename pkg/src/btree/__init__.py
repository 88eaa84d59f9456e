from .dot import ball_graph, dump_dot
from .probe import (
    BallProbe,
    Intersection,
    OracleResult,
    axis_intersection,
    axis_vertices,
    ball,
    ball_size,
    brute_force_fixed_at_distance,
    displacement,
    displacement_oracle,
    fix_ax_intersection,
    fix_shape,
    fixed_vertices,
    fixed_vertices_at_distance,
    max_radius,
    reflection_check,
)
from .vertex import BASE_VERTEX, TreeVertex, apply, base_vertex, neighbors, vertex_distance, vertex_of

__all__ = [
    "BASE_VERTEX",
    "BallProbe",
    "Intersection",
    "OracleResult",
    "TreeVertex",
    "apply",
    "axis_intersection",
    "axis_vertices",
    "ball",
    "ball_graph",
    "ball_size",
    "base_vertex",
    "brute_force_fixed_at_distance",
    "displacement",
    "displacement_oracle",
    "dump_dot",
    "fix_ax_intersection",
    "fix_shape",
    "fixed_vertices",
    "fixed_vertices_at_distance",
    "max_radius",
    "neighbors",
    "reflection_check",
    "vertex_distance",
    "vertex_of",
]
