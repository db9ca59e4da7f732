from .serialize import (
    scalar_json,
    pattern_json,
    assignment_json,
    validation_json,
    feasibility_json,
    amplitude_json,
    expansion_json,
    state_json,
    support_json,
    chain_json,
    fixpoint_json,
    sic_json,
    dumps,
)
from .reproduction import Claim, ReproReport, pattern_of, matches_up_to_sign, reproduce

__all__ = [
    "scalar_json",
    "pattern_json",
    "assignment_json",
    "validation_json",
    "feasibility_json",
    "amplitude_json",
    "expansion_json",
    "state_json",
    "support_json",
    "chain_json",
    "fixpoint_json",
    "sic_json",
    "dumps",
    "Claim",
    "ReproReport",
    "pattern_of",
    "matches_up_to_sign",
    "reproduce",
]
