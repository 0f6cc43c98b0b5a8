"""
Perímetro no local - fórmula de tiras, oráculo directo y formas cerradas.
"""

from .nonlocal_perimeter import (
    PerimeterBreakdown,
    classical_perimeter,
    classical_perimeter_shape,
    line_contribution,
    perimeter,
    perimeter_direct,
    perimeter_shape,
    semiperimeter_square,
    strip_interaction,
)

__all__ = [
    "PerimeterBreakdown",
    "classical_perimeter",
    "classical_perimeter_shape",
    "line_contribution",
    "perimeter",
    "perimeter_direct",
    "perimeter_shape",
    "semiperimeter_square",
    "strip_interaction",
]
