"""Spanning simplicial complexes of Jahangir graphs J(2,m).

Library plus CLI that builds the complex, computes its combinatorics
(spanning-tree classes, f-vectors, Hilbert series) by both structured
rules and independent brute-force oracles, checks Cohen-Macaulayness
through quasi-linear quotients, and reports every divergence between
the structured claims and the oracles instead of hiding it.
"""

from .algebra import (
    CMVerdict,
    MonomialIdeal,
    SquarefreeMonomial,
    cohen_macaulay_verdict,
    colon_mindeg,
    facet_ideal,
    find_qlq_ordering,
    has_quasi_linear_quotients,
    is_shelling,
    prefix_block_ordering,
)
from .complexes import (
    FVector,
    SimplicialComplex,
    dimension,
    f_vector_direct,
    is_pure,
    minimal_nonfaces,
    spanning_complex,
)
from .cycles import (
    CycleCatalog,
    CycleCatalogEntry,
    IntersectionMismatch,
    IntersectionSurvey,
    claimed_order,
    direct_intersection,
    intersection_survey,
    oracle_cycle_catalog,
    predict_intersection,
    predict_intersection_disjoint,
    predict_intersection_nested,
    predict_intersection_partial,
    word_cycle_catalog,
    word_edge_set,
    word_of,
)
from .errors import (
    CapacityError,
    ClassificationError,
    GraphParseError,
    InvalidParameterError,
    JssError,
    PurityError,
)
from .formulas import (
    FormulaFVector,
    FormulaTerm,
    HilbertSeries,
    f_vector_exact_ie,
    f_vector_formula,
    hilbert_function,
    hilbert_series,
)
from .graphs import (
    EdgeLabel,
    EdgeSet,
    Graph,
    build_jahangir,
    emit_graph,
    enumerate_simple_cycles,
    is_connected,
    jahangir_order,
    matrix_tree_count,
    parse_graph,
)
from .reports import ClaimResult, RunReport, build_graph_report, build_jahangir_report
from .spanning import (
    PartitionReport,
    SpanningTreeRecord,
    TreeClass,
    classify_tree,
    enumerate_spanning_trees_generic,
    enumerate_spanning_trees_jahangir,
    verify_partition,
)

__version__ = "0.1.0"

__all__ = [
    "CMVerdict",
    "CapacityError",
    "ClaimResult",
    "ClassificationError",
    "CycleCatalog",
    "CycleCatalogEntry",
    "EdgeLabel",
    "EdgeSet",
    "FVector",
    "FormulaFVector",
    "FormulaTerm",
    "Graph",
    "GraphParseError",
    "HilbertSeries",
    "IntersectionMismatch",
    "IntersectionSurvey",
    "InvalidParameterError",
    "JssError",
    "MonomialIdeal",
    "PartitionReport",
    "PurityError",
    "RunReport",
    "SimplicialComplex",
    "SpanningTreeRecord",
    "SquarefreeMonomial",
    "TreeClass",
    "build_graph_report",
    "build_jahangir",
    "build_jahangir_report",
    "claimed_order",
    "classify_tree",
    "cohen_macaulay_verdict",
    "colon_mindeg",
    "dimension",
    "direct_intersection",
    "emit_graph",
    "enumerate_simple_cycles",
    "enumerate_spanning_trees_generic",
    "enumerate_spanning_trees_jahangir",
    "f_vector_direct",
    "f_vector_exact_ie",
    "f_vector_formula",
    "facet_ideal",
    "find_qlq_ordering",
    "has_quasi_linear_quotients",
    "hilbert_function",
    "hilbert_series",
    "intersection_survey",
    "is_connected",
    "is_pure",
    "is_shelling",
    "jahangir_order",
    "matrix_tree_count",
    "minimal_nonfaces",
    "oracle_cycle_catalog",
    "parse_graph",
    "predict_intersection",
    "predict_intersection_disjoint",
    "predict_intersection_nested",
    "predict_intersection_partial",
    "prefix_block_ordering",
    "spanning_complex",
    "verify_partition",
    "word_cycle_catalog",
    "word_edge_set",
    "word_of",
]
