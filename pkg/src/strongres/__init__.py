"""Strong metric dimension and strong partition dimension of finite graphs."""

from .boundary import (
    SrGraph,
    boundary,
    end_vertices,
    is_maximally_distant,
    is_two_antipodal,
    mutually_maximally_distant_pairs,
    simplicial_vertices,
    strong_resolving_graph,
)
from .errors import (
    CertificateError,
    DomainError,
    GraphError,
    NotConnectedError,
    ParseError,
    SearchBudgetExceeded,
)
from .families import FamilySpec, expected_dims, expected_pds, generate, parse_spec
from .graph import (
    DistanceMatrix,
    Graph,
    all_pairs_distances,
    are_isomorphic,
    cartesian_product,
    cut_vertices,
    diameter,
    graph_from_edge_list,
    graph_to_edge_list,
    is_connected,
)
from .heuristics import p1_partition, p2_partition, unicyclic_analysis, unicyclic_partition
from .kernels import CertifiedValue, clique_number, vertex_cover_number
from .resolving import (
    VertexPartition,
    is_strong_resolving_partition,
    is_strong_resolving_set,
    set_strongly_resolves,
    vertex_strongly_resolves,
)
from .solvers import (
    BoundsReport,
    DimensionResult,
    brute_force_strong_metric_dimension,
    exhaustive_strong_partition_dimension,
    pds_bounds,
    strong_metric_dimension,
    strong_partition_dimension,
)

__version__ = "0.1.0"

__all__ = [
    "all_pairs_distances",
    "are_isomorphic",
    "boundary",
    "BoundsReport",
    "brute_force_strong_metric_dimension",
    "cartesian_product",
    "CertificateError",
    "CertifiedValue",
    "clique_number",
    "cut_vertices",
    "diameter",
    "DimensionResult",
    "DistanceMatrix",
    "DomainError",
    "end_vertices",
    "exhaustive_strong_partition_dimension",
    "expected_dims",
    "expected_pds",
    "FamilySpec",
    "generate",
    "Graph",
    "graph_from_edge_list",
    "graph_to_edge_list",
    "GraphError",
    "is_connected",
    "is_maximally_distant",
    "is_strong_resolving_partition",
    "is_strong_resolving_set",
    "is_two_antipodal",
    "mutually_maximally_distant_pairs",
    "NotConnectedError",
    "p1_partition",
    "p2_partition",
    "parse_spec",
    "ParseError",
    "pds_bounds",
    "SearchBudgetExceeded",
    "set_strongly_resolves",
    "simplicial_vertices",
    "SrGraph",
    "strong_metric_dimension",
    "strong_partition_dimension",
    "strong_resolving_graph",
    "unicyclic_analysis",
    "unicyclic_partition",
    "vertex_cover_number",
    "vertex_strongly_resolves",
    "VertexPartition",
]
