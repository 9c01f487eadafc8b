"""Distance spectra and distance Estrada indices of connected graphs.

The library computes exact integer distance matrices, eigendecomposes them
with a dependency-free symmetric solver, evaluates a nine-entry catalog of
bounds and identities on the distance Estrada index, and verifies the whole
catalog exhaustively over small labeled graphs.
"""

from .bounds import (
    BoundReport,
    CATALOG_IDS,
    DistSpectrumClass,
    EstradaValue,
    ExpBound,
    GraphEvaluation,
    SpectralMismatchError,
    bound_report,
    comparison_checks,
    distance_estrada,
    estrada_index,
    evaluate,
    is_complete,
    is_complete_multipartite,
    is_regular_diam_le2,
    lemma3_lambda1_lower,
    lemma4_classify,
    reports_from,
    thm1_bounds,
    thm2_lower,
    thm3_lower,
    thm4_ng_lower,
    thm5_upper,
    thm6_identity,
)
from .graphs import (
    DegreeProfile,
    DisconnectedGraphError,
    Graph,
    GraphFamily,
    GraphFormatError,
    complement,
    degree_profile,
    diameter,
    enumerate_connected,
    enumerate_regular,
    generate,
    is_connected,
    parse_edge_list,
    parse_graph6,
    regularity,
    to_graph6,
)
from .metric import DistanceMatrix, distance_matrix, sum_sq_distances
from .records import ReportRecord, build_record
from .spectra import (
    EigenConvergenceError,
    Spectrum,
    SymMatrix,
    adjacency_matrix,
    complement_adj_spectrum,
    count_positive,
    distance_sym,
    eig_sym,
    lemma1_check,
    lemma2_spectrum,
)
from .verify import VerificationSummary, verify_population

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "CATALOG_IDS",
    "DegreeProfile",
    "DisconnectedGraphError",
    "DistSpectrumClass",
    "DistanceMatrix",
    "EigenConvergenceError",
    "EstradaValue",
    "ExpBound",
    "Graph",
    "GraphEvaluation",
    "GraphFamily",
    "GraphFormatError",
    "ReportRecord",
    "SpectralMismatchError",
    "Spectrum",
    "SymMatrix",
    "VerificationSummary",
    "adjacency_matrix",
    "bound_report",
    "build_record",
    "comparison_checks",
    "complement",
    "complement_adj_spectrum",
    "count_positive",
    "degree_profile",
    "diameter",
    "distance_estrada",
    "distance_matrix",
    "distance_sym",
    "eig_sym",
    "enumerate_connected",
    "enumerate_regular",
    "estrada_index",
    "evaluate",
    "generate",
    "is_complete",
    "is_complete_multipartite",
    "is_connected",
    "is_regular_diam_le2",
    "lemma1_check",
    "lemma2_spectrum",
    "lemma3_lambda1_lower",
    "lemma4_classify",
    "parse_edge_list",
    "parse_graph6",
    "regularity",
    "reports_from",
    "sum_sq_distances",
    "thm1_bounds",
    "thm2_lower",
    "thm3_lower",
    "thm4_ng_lower",
    "thm5_upper",
    "thm6_identity",
    "to_graph6",
    "verify_population",
]
