"""
Errores de dominio.

Todas las operaciones lanzan subclases de PolyominoError; la CLI las traduce
a códigos de salida y la API a respuestas HTTP.
"""
from typing import Any, Optional, Sequence


class PolyominoError(Exception):
    """Error de dominio base."""


class EmptyPolyomino(PolyominoError):
    """Se pidió operar sobre un poliominó sin celdas."""


class InvalidShapeSpec(PolyominoError):
    """ShapeSpec que no cumple sus invariantes (lados, protuberancia, desplazamiento)."""


class PolyominoFormatError(PolyominoError):
    """Texto de poliominó ilegible."""


class DivergentParameter(PolyominoError):
    """Exponente λ ≤ 1: la serie de Hurwitz diverge."""


class WindowTooSmall(PolyominoError):
    """La ventana de la suma directa no cubre el poliominó."""


class CollisionWithOccupiedCells(PolyominoError):
    """El desplazamiento de una tira cae sobre celdas ocupadas."""


class StripNotFound(PolyominoError):
    """La tira indicada no es una tira maximal del poliominó."""


class PreconditionViolated(PolyominoError):
    """Precondición de un paso de reducción no satisfecha."""


class NonTermination(PolyominoError):
    """La reducción superó el tope de iteraciones."""

    def __init__(self, message: str, polyomino: Any = None, steps: Optional[Sequence[Any]] = None):
        super().__init__(message)
        self.polyomino = polyomino
        self.steps = list(steps or [])


class NoTwoShapes(PolyominoError):
    """El catálogo de área n tiene una sola forma: no hay cruce posible."""


class HypothesisViolated(PolyominoError):
    """Parámetros fuera de las hipótesis de un diagnóstico de positividad."""

    def __init__(self, constraint: str):
        super().__init__(f"hipótesis no satisfecha: {constraint}")
        self.constraint = constraint


class AreaTooLarge(PolyominoError):
    """Área por encima del tope de enumeración exhaustiva."""


class AmbiguousMax(PolyominoError):
    """Dos longitudes empatan (dentro del margen) en el máximo."""

    def __init__(self, message: str, ties: Sequence[int] = ()):
        super().__init__(message)
        self.ties = list(ties)


class PolyominoTooLargeForTorus(PolyominoError):
    """El poliominó no cabe en una caja L/2 del toro."""


class VerificationError(PolyominoError):
    """Violación de un invariante verificado (código de salida 2)."""


class TheoremViolation(VerificationError):
    """Un poliominó fuera de las órbitas del catálogo alcanza el mínimo."""

    def __init__(self, message: str, counterexample: Any = None):
        super().__init__(message)
        self.counterexample = counterexample
