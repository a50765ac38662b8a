"""Orientation of finite sequences and of transformations of the chain [n]."""

from orient.sequences import (
    OrientationSort,
    augment,
    cyclic_ascent_count,
    cyclic_descent_count,
    is_anticyclic,
    is_anticyclic_by_count,
    is_cyclic,
    is_cyclic_aux,
    is_cyclic_by_count,
    is_cyclic_by_rotation,
    is_increasing,
    orientation,
    rank,
    rotate,
)
from orient.mappings import (
    InvalidDomainError,
    Transformation,
    image_seq,
    is_orientation_preserving,
    is_orientation_reversing,
    mapping_orientation,
    rank_of,
)
from orient.triples import (
    BudgetExceededError,
    UndefinedPredictionError,
    VerificationReport,
    find_rank2_counterexamples,
    is_determined_by_triples,
    predicted_orientation_from_triples,
    subsequence_closure_check,
    subsequences,
    triple_profile,
    verify_theorem3,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "InvalidDomainError",
    "OrientationSort",
    "Transformation",
    "UndefinedPredictionError",
    "VerificationReport",
    "augment",
    "cyclic_ascent_count",
    "cyclic_descent_count",
    "find_rank2_counterexamples",
    "image_seq",
    "is_anticyclic",
    "is_anticyclic_by_count",
    "is_cyclic",
    "is_cyclic_aux",
    "is_cyclic_by_count",
    "is_cyclic_by_rotation",
    "is_determined_by_triples",
    "is_increasing",
    "is_orientation_preserving",
    "is_orientation_reversing",
    "mapping_orientation",
    "orientation",
    "predicted_orientation_from_triples",
    "rank",
    "rank_of",
    "rotate",
    "subsequence_closure_check",
    "subsequences",
    "triple_profile",
    "verify_theorem3",
]
