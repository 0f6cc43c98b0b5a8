"""
Reducción - movimientos elementales, algoritmo principal y algoritmo cross-convex.
"""

from .moves import (
    chessboard_exchange,
    convexify,
    fill_holes_step,
    is_in_extended_catalog,
    relocate_best_cell,
    shift_strip,
)
from ..catalog.diagnostics import step7_f as step7_positivity
from .algorithms import (
    ReductionStep,
    ReductionTrace,
    TerminalClass,
    cross_convex_algorithm,
    main_algorithm,
)

__all__ = [
    "ReductionStep",
    "ReductionTrace",
    "TerminalClass",
    "chessboard_exchange",
    "convexify",
    "cross_convex_algorithm",
    "fill_holes_step",
    "is_in_extended_catalog",
    "main_algorithm",
    "relocate_best_cell",
    "shift_strip",
    "step7_positivity",
]
