"""Local rank modulation for flash memories: demodulation, realizability,
push-to-the-top, the (1,2,n) Gray-code tooling and the (1,3,n) codec."""

from lrm.core import (
    ConstraintGraph,
    LrmParams,
    comparable_cells,
    constraint_graph,
    demodulate,
    is_overlap_consistent,
    is_realizable,
    push_to_top,
    realize,
    window_cells,
)
from lrm.errors import (
    BudgetExceeded,
    IllegalCodeword,
    InconsistentOverlap,
    LrmError,
    NotRealizable,
    SuccessionViolation,
    TiedWindow,
    UnsupportedN,
)

__all__ = [
    "BudgetExceeded",
    "ConstraintGraph",
    "IllegalCodeword",
    "InconsistentOverlap",
    "LrmError",
    "LrmParams",
    "NotRealizable",
    "SuccessionViolation",
    "TiedWindow",
    "UnsupportedN",
    "comparable_cells",
    "constraint_graph",
    "demodulate",
    "is_overlap_consistent",
    "is_realizable",
    "push_to_top",
    "realize",
    "window_cells",
]
