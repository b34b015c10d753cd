"""Deterministic clique-extension graphs with exact analysis oracles.

The generator grows a graph from a seed clique K_n: at every step t each
clique of order f(t) is extended by g(t) new vertices into a larger
clique.  The package measures the generated graphs exactly (distances,
Wiener index, clustering, clique counts), evaluates the matching closed
forms in unbounded integer and rational arithmetic, analyzes the
normalized Laplacian spectrum, and arbitrates every formula against
brute-force measurement in a validation harness.
"""

from .errors import (
    BudgetExceededError,
    DisconnectedGraphError,
    EigensolveError,
    FrustumError,
    GrowthStallWarning,
    InvalidParamsError,
    IsolatedVertexError,
    SequenceRangeError,
    StalledStepError,
)
from .metrics import (
    DistanceTable,
    MetricsReport,
    StepIncrement,
    StepMetrics,
    all_pairs_distances,
    average_distance,
    bfs_distances,
    clique_count_containing,
    degree_at,
    diameter,
    global_clustering,
    increment_series,
    is_connected,
    local_clustering,
    metrics_report,
    render_metrics_report,
    wiener_index,
)
from .model import (
    CapRecord,
    FrustumGraph,
    Graph,
    ModelParams,
    VertexMeta,
    clique_membership_counts,
    enumerate_k_cliques,
    extend_step,
    generate,
    seed_graph,
    snapshot_at,
    snapshots,
    validate_params,
)
from .oracles import (
    RECOMMENDED_WIENER_CANDIDATE,
    ConeClosedForms,
    CylinderClosedForms,
    DensificationDiagnostic,
    StepDiagnostic,
    WienerCandidates,
    cone_clustering_bound,
    cone_closed_forms,
    cone_degree_closed,
    cone_diameter_closed,
    cone_edges_closed,
    cone_order_closed,
    cone_wiener_closed,
    cylinder_constant_closed,
    densification_diagnostic,
)
from .sequences import (
    SequenceSpec,
    eval_sequence,
    format_sequence_spec,
    parse_sequence_spec,
)
from .spectral import (
    MixingCheck,
    SpectralReport,
    eigenvalues_symmetric,
    mixing_check,
    normalized_laplacian,
    spectral_gap,
    spectral_report,
)
from .validation import (
    ValidationReport,
    ValidationRow,
    render_validation_json,
    render_validation_text,
    run_validation,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "CapRecord",
    "ConeClosedForms",
    "CylinderClosedForms",
    "DensificationDiagnostic",
    "DisconnectedGraphError",
    "DistanceTable",
    "EigensolveError",
    "FrustumError",
    "FrustumGraph",
    "Graph",
    "GrowthStallWarning",
    "InvalidParamsError",
    "IsolatedVertexError",
    "MetricsReport",
    "MixingCheck",
    "ModelParams",
    "RECOMMENDED_WIENER_CANDIDATE",
    "SequenceRangeError",
    "SequenceSpec",
    "SpectralReport",
    "StalledStepError",
    "StepDiagnostic",
    "StepIncrement",
    "StepMetrics",
    "ValidationReport",
    "ValidationRow",
    "VertexMeta",
    "WienerCandidates",
    "all_pairs_distances",
    "average_distance",
    "bfs_distances",
    "clique_count_containing",
    "clique_membership_counts",
    "cone_closed_forms",
    "cone_clustering_bound",
    "cone_degree_closed",
    "cone_diameter_closed",
    "cone_edges_closed",
    "cone_order_closed",
    "cone_wiener_closed",
    "cylinder_constant_closed",
    "degree_at",
    "densification_diagnostic",
    "diameter",
    "eigenvalues_symmetric",
    "enumerate_k_cliques",
    "eval_sequence",
    "extend_step",
    "format_sequence_spec",
    "generate",
    "global_clustering",
    "increment_series",
    "is_connected",
    "local_clustering",
    "metrics_report",
    "mixing_check",
    "normalized_laplacian",
    "parse_sequence_spec",
    "render_metrics_report",
    "render_validation_json",
    "render_validation_text",
    "run_validation",
    "seed_graph",
    "snapshot_at",
    "snapshots",
    "spectral_gap",
    "spectral_report",
    "validate_params",
    "wiener_index",
]
