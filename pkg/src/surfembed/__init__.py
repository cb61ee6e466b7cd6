"""Exact-arithmetic tools for Z2- and Z-embeddability of graphs on surfaces."""

from .graph import Graph, EdgePair, independent_pairs, complete_graph, complete_bipartite
from .gf2 import BitMatrix, rank_gf2, hyperbolic_matrix_gf2, factor_even, factor_odd, in_affine_span
from .intmat import IntMatrix, rank_q, symplectic_matrix_int, factor_alternating
from .drawing import (
    PlanarDrawing,
    ParityMatrix,
    CompatibilityClass,
    convex_drawing,
    canonical_drawing,
    crossing_parity_matrix,
    signed_crossing_matrix,
    apply_finger_move,
    is_compatible_mod2,
    realize_parity,
)
from .surface import (
    SurfaceSpec,
    SurfaceDrawing,
    VerifyReport,
    construct_z2_embedding,
    construct_z_embedding,
    verify_z2,
    verify_z,
    extract_matrix,
)
from .layout import verify_geometric
from .solver import (
    SolverBudget,
    SolveResult,
    GenusResult,
    z2_embeddable_orientable,
    z2_embeddable_nonorientable,
    z2_embeddable_euler,
    z2_genus,
    kmn_lower_bound,
    k2n_lower_bound,
)

__all__ = [
    "Graph",
    "EdgePair",
    "independent_pairs",
    "complete_graph",
    "complete_bipartite",
    "BitMatrix",
    "rank_gf2",
    "hyperbolic_matrix_gf2",
    "factor_even",
    "factor_odd",
    "in_affine_span",
    "IntMatrix",
    "rank_q",
    "symplectic_matrix_int",
    "factor_alternating",
    "PlanarDrawing",
    "ParityMatrix",
    "CompatibilityClass",
    "convex_drawing",
    "canonical_drawing",
    "crossing_parity_matrix",
    "signed_crossing_matrix",
    "apply_finger_move",
    "is_compatible_mod2",
    "realize_parity",
    "SurfaceSpec",
    "SurfaceDrawing",
    "VerifyReport",
    "construct_z2_embedding",
    "construct_z_embedding",
    "verify_z2",
    "verify_z",
    "extract_matrix",
    "verify_geometric",
    "SolverBudget",
    "SolveResult",
    "GenusResult",
    "z2_embeddable_orientable",
    "z2_embeddable_nonorientable",
    "z2_embeddable_euler",
    "z2_genus",
    "kmn_lower_bound",
    "k2n_lower_bound",
]
