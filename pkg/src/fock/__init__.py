from .amplitudes import determinant, permanent, multiplicity_factorial
from .catalog import (
    STATE_KINDS,
    boson_n,
    boson_pair,
    fermion_pair,
    parse_state_spec,
    product_of,
    state_spec_text,
    vacuum,
)
from .state import (
    OccupationPattern,
    ProductTerm,
    FockState,
    product_state,
    amplitude,
    amplitude_sign,
    probability,
    is_supported,
    context_patterns,
    outcome_distribution,
    expand_in_context,
    synthesize,
    number_expectation,
    transform_state,
)

__all__ = [
    "STATE_KINDS",
    "fermion_pair",
    "boson_pair",
    "boson_n",
    "vacuum",
    "product_of",
    "parse_state_spec",
    "state_spec_text",
    "determinant",
    "permanent",
    "multiplicity_factorial",
    "OccupationPattern",
    "ProductTerm",
    "FockState",
    "product_state",
    "amplitude",
    "amplitude_sign",
    "probability",
    "is_supported",
    "context_patterns",
    "outcome_distribution",
    "expand_in_context",
    "synthesize",
    "number_expectation",
    "transform_state",
]
