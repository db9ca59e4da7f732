from .hypergraph import (
    ModeVector,
    Context,
    ModeHypergraph,
    ValidationIssue,
    ValidationReport,
    validate,
    overlap,
    apply_transform,
    projector_matrix,
)
from .canonical import canonical_18, CANONICAL_PATH
from .io import MODESET_SCHEMA, load_modeset, modeset_from_dict, modeset_to_dict
from .linalg import Matrix, identity, is_orthogonal, mat_mul, is_scalar_multiple_of_identity
from .transforms import (
    INV_SQRT2,
    signed_permutation,
    givens,
    random_exact_orthogonal,
    random_float_orthogonal,
)

__all__ = [
    "ModeVector",
    "Context",
    "ModeHypergraph",
    "ValidationIssue",
    "ValidationReport",
    "validate",
    "overlap",
    "apply_transform",
    "projector_matrix",
    "canonical_18",
    "CANONICAL_PATH",
    "MODESET_SCHEMA",
    "load_modeset",
    "modeset_from_dict",
    "modeset_to_dict",
    "Matrix",
    "identity",
    "is_orthogonal",
    "mat_mul",
    "is_scalar_multiple_of_identity",
    "INV_SQRT2",
    "signed_permutation",
    "givens",
    "random_exact_orthogonal",
    "random_float_orthogonal",
]
