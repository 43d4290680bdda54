"""Negative-type analysis of finite metric spaces.

Decide strict/non-strict p-negative type, bracket the supremal exponent,
and construct or verify nontrivial p-polygonal equalities.
"""

from .errors import (
    AsymmetricEntry,
    DimensionTooSmall,
    DisconnectedGraph,
    DuplicatePoint,
    EigenFailure,
    IndexOutOfRange,
    InvalidCap,
    InvalidNormOrder,
    LengthMismatch,
    NegativeExponent,
    NegTypeError,
    NonpositiveDistance,
    NonpositiveWeight,
    NonzeroDiagonal,
    NoRootInUnitInterval,
    NotApplicable,
    NotBalanced,
    NotSquare,
    NoWitnessFound,
    TriangleViolation,
    UnbalancedWeights,
    ZeroVector,
)
from .metric import (
    MetricSpace,
    PowerMatrix,
    from_graph,
    from_points,
    is_ultrametric,
    power_matrix,
    random_ultrametric,
    validate_metric,
)
from .polyeq import (
    EqualityReport,
    IntervalKind,
    IntervalReport,
    ReducedForm,
    ReducedKind,
    SignedSimplex,
    WitnessMethod,
    WitnessReport,
    gap,
    is_nondegenerate,
    polygonal_interval,
    reduce,
    simplex_to_vector,
    vector_to_simplex,
    verify_equality,
    witness_at_p,
    witness_at_supremal,
    witness_ivt,
)
from .quadform import (
    BalancedVector,
    Classification,
    QuadFormReport,
    SupremalResult,
    SupremalStatus,
    balanced_basis,
    basis_matrix,
    classify,
    hilbert_embeddable,
    quad_form,
    restricted_form,
    supremal,
)

__version__ = "0.1.0"

__all__ = [
    "AsymmetricEntry",
    "BalancedVector",
    "Classification",
    "DimensionTooSmall",
    "DisconnectedGraph",
    "DuplicatePoint",
    "EigenFailure",
    "EqualityReport",
    "IndexOutOfRange",
    "IntervalKind",
    "IntervalReport",
    "InvalidCap",
    "InvalidNormOrder",
    "LengthMismatch",
    "MetricSpace",
    "NegativeExponent",
    "NegTypeError",
    "NonpositiveDistance",
    "NonpositiveWeight",
    "NonzeroDiagonal",
    "NoRootInUnitInterval",
    "NotApplicable",
    "NotBalanced",
    "NotSquare",
    "NoWitnessFound",
    "PowerMatrix",
    "QuadFormReport",
    "ReducedForm",
    "ReducedKind",
    "SignedSimplex",
    "SupremalResult",
    "SupremalStatus",
    "TriangleViolation",
    "UnbalancedWeights",
    "WitnessMethod",
    "WitnessReport",
    "ZeroVector",
    "balanced_basis",
    "basis_matrix",
    "classify",
    "from_graph",
    "from_points",
    "gap",
    "hilbert_embeddable",
    "is_nondegenerate",
    "is_ultrametric",
    "polygonal_interval",
    "power_matrix",
    "quad_form",
    "random_ultrametric",
    "reduce",
    "restricted_form",
    "simplex_to_vector",
    "supremal",
    "validate_metric",
    "vector_to_simplex",
    "verify_equality",
    "witness_at_p",
    "witness_at_supremal",
    "witness_ivt",
]
