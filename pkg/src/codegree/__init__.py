"""Exact desk-scale toolkit for intersecting families: kernel systems,
positive codegrees, sunflowers, shadows, and exhaustive search certificates."""

__version__ = "0.1.0"

from .bitset import INFINITY, ExtNat, VertexSet
from .errors import BudgetExceeded, HypothesisViolation, ParseError
from .hypergraph import (
    Hypergraph,
    Params,
    covered_isets,
    format_hypergraph,
    is_t_intersecting,
    min_positive_degree,
    min_positive_degree_witness,
    parse_hypergraph,
    relabel,
)
from .kernels import (
    CodegreeReport,
    KernelSpec,
    build_kernel,
    codegree_check,
    counterexample_family,
    extremal_family,
    kernel_edge_count,
)
from .sunflowers import (
    Sunflower,
    SunflowerQuery,
    check_core_lower_bound,
    erdos_rado_bound,
    find_bounded_core_sunflower,
    find_sunflower,
    validate_sunflower,
)
from .shadows import (
    KKVerification,
    SetFamily,
    complement_family,
    shadow,
    verify_kruskal_katona_cell,
)
from .badtriples import (
    BadTripleWitness,
    LemmaAudit,
    SearchLimits,
    audit_intersection_lemmas,
    evaluate_conditions,
    extension_profile,
    search_bad_triple,
)
from .extremal import (
    Feasibility,
    SearchResult,
    canonical_form,
    enumerate_feasible,
    exhaustive_max,
    feasible,
    find_covering_kernel_set,
    max_feasible,
)

__all__ = [
    "__version__",
    "INFINITY",
    "ExtNat",
    "VertexSet",
    "BudgetExceeded",
    "HypothesisViolation",
    "ParseError",
    "Hypergraph",
    "Params",
    "covered_isets",
    "format_hypergraph",
    "is_t_intersecting",
    "min_positive_degree",
    "min_positive_degree_witness",
    "parse_hypergraph",
    "relabel",
    "CodegreeReport",
    "KernelSpec",
    "build_kernel",
    "codegree_check",
    "counterexample_family",
    "extremal_family",
    "kernel_edge_count",
    "Sunflower",
    "SunflowerQuery",
    "check_core_lower_bound",
    "erdos_rado_bound",
    "find_bounded_core_sunflower",
    "find_sunflower",
    "validate_sunflower",
    "KKVerification",
    "SetFamily",
    "complement_family",
    "shadow",
    "verify_kruskal_katona_cell",
    "BadTripleWitness",
    "LemmaAudit",
    "SearchLimits",
    "audit_intersection_lemmas",
    "evaluate_conditions",
    "extension_profile",
    "search_bad_triple",
    "Feasibility",
    "SearchResult",
    "canonical_form",
    "enumerate_feasible",
    "exhaustive_max",
    "feasible",
    "find_covering_kernel_set",
    "max_feasible",
]
