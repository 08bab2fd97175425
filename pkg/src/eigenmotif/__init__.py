"""Evolve graphs while keeping part of the normalized-Laplacian
spectrum under control.

The package builds simple undirected graphs, applies local evolution
operations (vertex/motif doubling, coupling through a neighborhood,
block attachment), and emits *claims*: eigenvalues with explicit
eigenfunctions and multiplicity lower bounds that are guaranteed by the
construction.  Every claim can be re-verified numerically against the
full spectrum, computed with an in-package Jacobi eigensolver and
cross-checked against an independent SVD-based multiplicity oracle.
"""

from .graph import (
    DuplicateClasses,
    Graph,
    Motif,
    PreconditionError,
    VertexMap,
    build_graph,
    connected_components,
    duplicate_vertex_classes,
    format_edge_list,
    identity_map,
    induced_motif,
    is_bipartite,
    is_connected,
    parse_edge_list,
    read_edge_list,
    write_edge_list,
)
from .spectral import (
    GROUP_TOL,
    Spectrum,
    adjacency_matrix,
    adjacency_nullity,
    delta_apply,
    eigen_residual,
    eigendecompose,
    group_eigenvalues,
    laplacian_spectrum,
    multiplicity,
    normalized_laplacian,
    residual_tol,
    weighted_inner_product,
)
from .ops import (
    ALLOWED_PROVENANCE,
    ZERO_SUM_TOL,
    EigenClaim,
    KiteTailResult,
    MotifSystem,
    OperationResult,
    attach_multi_subgraphs,
    attach_subgraph,
    attach_subgraph_multi_anchor,
    couple_via_neighbors,
    double_motif,
    double_motif_repeated,
    double_vertex,
    double_vertex_repeated,
    duplicate_class_claims,
    kite_tail_relation,
    motif_doubling_eigenvalues,
)
from .families import (
    FAMILY_NAMES,
    ExpectedSpectrum,
    FamilySpec,
    Fixture,
    FixtureCase,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    example_catalog,
    generate,
    kite_graph,
    path_graph,
    random_connected,
    star_graph,
    star_of_triangles_graph,
)
from .verify import (
    Tolerances,
    VerificationReport,
    brute_force_multiplicity_oracle,
    check_fixture,
    soundness_sweep,
    verify_claims,
    verify_graph_invariants,
)
from .kernels import BACKEND, jacobi_eigh

__version__ = "0.1.0"

__all__ = [
    "ALLOWED_PROVENANCE",
    "BACKEND",
    "DuplicateClasses",
    "EigenClaim",
    "ExpectedSpectrum",
    "FAMILY_NAMES",
    "FamilySpec",
    "Fixture",
    "FixtureCase",
    "GROUP_TOL",
    "Graph",
    "KiteTailResult",
    "Motif",
    "MotifSystem",
    "OperationResult",
    "PreconditionError",
    "Spectrum",
    "Tolerances",
    "VerificationReport",
    "VertexMap",
    "ZERO_SUM_TOL",
    "adjacency_matrix",
    "adjacency_nullity",
    "attach_multi_subgraphs",
    "attach_subgraph",
    "attach_subgraph_multi_anchor",
    "brute_force_multiplicity_oracle",
    "build_graph",
    "check_fixture",
    "complete_bipartite_graph",
    "complete_graph",
    "connected_components",
    "couple_via_neighbors",
    "cycle_graph",
    "delta_apply",
    "double_motif",
    "double_motif_repeated",
    "double_vertex",
    "double_vertex_repeated",
    "duplicate_class_claims",
    "duplicate_vertex_classes",
    "eigen_residual",
    "eigendecompose",
    "example_catalog",
    "format_edge_list",
    "generate",
    "group_eigenvalues",
    "identity_map",
    "induced_motif",
    "is_bipartite",
    "is_connected",
    "jacobi_eigh",
    "kite_graph",
    "kite_tail_relation",
    "laplacian_spectrum",
    "motif_doubling_eigenvalues",
    "multiplicity",
    "normalized_laplacian",
    "parse_edge_list",
    "path_graph",
    "random_connected",
    "read_edge_list",
    "residual_tol",
    "soundness_sweep",
    "star_graph",
    "star_of_triangles_graph",
    "verify_claims",
    "verify_graph_invariants",
    "weighted_inner_product",
    "write_edge_list",
]
