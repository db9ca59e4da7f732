from .propagation import (
    Justification,
    SupportTable,
    PartialAssignment,
    Step,
    HardyChain,
    support_table,
    default_order,
    propagate,
    hardy_search,
    global_consistency,
)

__all__ = [
    "Justification",
    "SupportTable",
    "PartialAssignment",
    "Step",
    "HardyChain",
    "support_table",
    "default_order",
    "propagate",
    "hardy_search",
    "global_consistency",
]
