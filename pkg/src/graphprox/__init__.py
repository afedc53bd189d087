"""Proximity measures for vertices of weighted multigraphs and multidigraphs.

Five measures over one immutable graph model: path accessibility,
connection reliability, route accessibility, relative forest accessibility,
and accessibility via dense forests (with the Laplacian Moore-Penrose
inverse), plus exact brute-force oracles and mechanical checkers for the
normative proximity axioms.
"""

from .graph import (
    Edge,
    GraphError,
    WeightedMultigraph,
    build_jbar,
    build_laplacian,
    build_weight_matrix,
    components,
    directed,
    reverse,
    scale_weights,
    symmetrize,
    undirected,
)
from .oracles import (
    CapExceededError,
    ForestCensus,
    SimplePath,
    enum_rooted_forests,
    enum_routes,
    enum_simple_paths,
    reliability_by_states,
    total_path_weight,
)
from .paths import TooManyPathsError, connection_reliability, epsilon0, path_accessibility
from .proximity import ProximityMatrix
from .routes import (
    AdmissibilityReport,
    DivergentSeriesError,
    SingularUpdateError,
    apply_route_updates,
    check_admissibility,
    rank_one_update,
    route_accessibility,
)
from .forests import (
    PerturbationDeltas,
    QkStack,
    default_alpha,
    dense_forest_accessibility,
    dense_forest_threshold,
    edge_perturbation_deltas,
    forest_accessibility,
    jbar_limit_check,
    laplacian_pinv,
    pinv_limit_estimate,
    pinv_topological,
    qk_decomposition,
)
from .axioms import (
    MEASURES,
    MeasureSpec,
    Perturbation,
    PropertyReport,
    Witness,
    apply_perturbation,
    check_diagonal_maximality,
    check_disconnection,
    check_doubly_stochastic,
    check_connectivity,
    check_macrovertex,
    check_metric_axioms,
    check_metric_representability,
    check_monotonicity,
    check_nonnegativity,
    check_reversal,
    check_symmetry,
    check_transit,
    check_triangle_proximity,
    measure_spec,
    metric_transform,
    reachability,
    replay_witness,
    serialize_reports,
    transit_triples,
    validate_macrovertex,
)
from .corpus import (
    PAPER_TABLE1,
    TABLE_MEASURES,
    TABLE_PROPERTIES,
    Table1Result,
    corpus_graphs,
    perturbation_candidates,
    reproduce_table1,
)
from .figures import (
    EXAMPLES,
    OrderingResult,
    appendix_delta_checks,
    run_figure_examples,
)

__all__ = [
    "AdmissibilityReport",
    "CapExceededError",
    "DivergentSeriesError",
    "Edge",
    "EXAMPLES",
    "ForestCensus",
    "GraphError",
    "MEASURES",
    "MeasureSpec",
    "OrderingResult",
    "PAPER_TABLE1",
    "Perturbation",
    "PerturbationDeltas",
    "PropertyReport",
    "ProximityMatrix",
    "QkStack",
    "SimplePath",
    "SingularUpdateError",
    "TABLE_MEASURES",
    "TABLE_PROPERTIES",
    "Table1Result",
    "TooManyPathsError",
    "WeightedMultigraph",
    "Witness",
    "appendix_delta_checks",
    "apply_perturbation",
    "apply_route_updates",
    "build_jbar",
    "build_laplacian",
    "build_weight_matrix",
    "check_admissibility",
    "check_connectivity",
    "check_diagonal_maximality",
    "check_disconnection",
    "check_doubly_stochastic",
    "check_macrovertex",
    "check_metric_axioms",
    "check_metric_representability",
    "check_monotonicity",
    "check_nonnegativity",
    "check_reversal",
    "check_symmetry",
    "check_transit",
    "check_triangle_proximity",
    "components",
    "connection_reliability",
    "corpus_graphs",
    "default_alpha",
    "dense_forest_accessibility",
    "dense_forest_threshold",
    "directed",
    "edge_perturbation_deltas",
    "enum_rooted_forests",
    "enum_routes",
    "enum_simple_paths",
    "epsilon0",
    "forest_accessibility",
    "jbar_limit_check",
    "laplacian_pinv",
    "measure_spec",
    "metric_transform",
    "path_accessibility",
    "perturbation_candidates",
    "pinv_limit_estimate",
    "pinv_topological",
    "qk_decomposition",
    "rank_one_update",
    "reachability",
    "reliability_by_states",
    "replay_witness",
    "reproduce_table1",
    "reverse",
    "route_accessibility",
    "run_figure_examples",
    "scale_weights",
    "serialize_reports",
    "symmetrize",
    "total_path_weight",
    "transit_triples",
    "undirected",
    "validate_macrovertex",
]
