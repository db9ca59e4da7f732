from .solver import (
    Statistics,
    SolveMode,
    Assignment,
    ParityCertificate,
    FeasibilityResult,
    parity_certificate,
    solve,
    is_valid_assignment,
    hole_dual,
    assignment_total,
    bosonic_feasibility_scan,
    solutions_frame,
)

__all__ = [
    "Statistics",
    "SolveMode",
    "Assignment",
    "ParityCertificate",
    "FeasibilityResult",
    "parity_certificate",
    "solve",
    "is_valid_assignment",
    "hole_dual",
    "assignment_total",
    "bosonic_feasibility_scan",
    "solutions_frame",
]
