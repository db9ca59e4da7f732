from .qsqrt2 import QSqrt2, parse_scalar, rational_sqrt
from .backend import (
    Scalar,
    ScalarBackend,
    ExactBackend,
    FloatBackend,
    EXACT,
    FLOAT,
    DEFAULT_TOLERANCE,
    get_backend,
    backend_of,
)

__all__ = [
    "QSqrt2",
    "parse_scalar",
    "rational_sqrt",
    "Scalar",
    "ScalarBackend",
    "ExactBackend",
    "FloatBackend",
    "EXACT",
    "FLOAT",
    "DEFAULT_TOLERANCE",
    "get_backend",
    "backend_of",
]
