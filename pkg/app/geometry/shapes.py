"""
Familias canónicas: cuadrado 𝓠_l, cuasicuadrado 𝓡_{l,l+1} y rectángulo 𝓡_{a,b},
cada una con una k-protuberancia opcional adosada al lado corto o al largo.

Convención de realización: el cuerpo ocupa b columnas (eje x) y a filas (eje y).
La protuberancia del lado corto es una tira vertical en x = b; la del lado
largo, una tira horizontal en y = a. `offset` es su posición a lo largo del lado.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Tuple

from ..core.errors import InvalidShapeSpec
from .lattice import Polyomino


class ShapeFamily(str, Enum):
    SQUARE = "square"
    QUASI_SQUARE = "quasi_square"
    RECT = "rect"


class Side(str, Enum):
    SHORTER = "shorter"
    LONGER = "longer"


@dataclass(frozen=True, order=True)
class ShapeSpec:
    """𝓡_{a,b}^k con a ≤ b; la familia se deduce de (a, b)."""
    a: int
    b: int
    k: int = 0
    side: Side = Side.SHORTER

    def __post_init__(self):
        if not 1 <= self.a <= self.b:
            raise InvalidShapeSpec(f"se requiere 1 ≤ a ≤ b (a={self.a}, b={self.b})")
        if self.k < 0:
            raise InvalidShapeSpec(f"protuberancia negativa (k={self.k})")
        side = Side(self.side)
        # con k = 0 o a = b el lado no distingue formas
        if self.k == 0 or self.a == self.b:
            side = Side.SHORTER
        object.__setattr__(self, "side", side)
        if self.k > self.attached_side_length - 1:
            raise InvalidShapeSpec(
                f"k={self.k} debe ser < {self.attached_side_length} (lado {side.value} de 𝓡_{{{self.a},{self.b}}})"
            )

    @classmethod
    def square(cls, l: int, k: int = 0) -> "ShapeSpec":
        return cls(l, l, k)

    @classmethod
    def quasi_square(cls, l: int, k: int = 0, side: Side = Side.SHORTER) -> "ShapeSpec":
        return cls(l, l + 1, k, side)

    @classmethod
    def rect(cls, a: int, b: int, k: int = 0, side: Side = Side.SHORTER) -> "ShapeSpec":
        return cls(min(a, b), max(a, b), k, side)

    @property
    def family(self) -> ShapeFamily:
        if self.a == self.b:
            return ShapeFamily.SQUARE
        if self.b == self.a + 1:
            return ShapeFamily.QUASI_SQUARE
        return ShapeFamily.RECT

    @property
    def area(self) -> int:
        return self.a * self.b + self.k

    @property
    def attached_side_length(self) -> int:
        return self.a if self.side == Side.SHORTER else self.b

    @property
    def classical_perimeter(self) -> int:
        return 2 * (self.a + self.b) + (2 if self.k else 0)

    @property
    def label(self) -> str:
        base = f"Q{self.a}" if self.family == ShapeFamily.SQUARE else f"R{self.a},{self.b}"
        if not self.k:
            return base
        suffix = "L" if self.side == Side.LONGER else ""
        return f"{base}^{self.k}{suffix}"

    def __str__(self) -> str:
        return self.label

    def alternate(self) -> "ShapeSpec":
        """
        Otra descripción congruente de la misma forma, o self si no existe.

        Con k = s − 1 (s, lado de anclaje; t, la otra dimensión del cuerpo) la
        forma es también un cuerpo (t+1) × (s−1) con una t-protuberancia sobre
        el lado de longitud t+1.
        """
        s = self.attached_side_length
        if self.k == 0 or self.k != s - 1:
            return self
        t = self.b if self.side == Side.SHORTER else self.a
        long_side, other = t + 1, s - 1
        side = Side.SHORTER if long_side <= other else Side.LONGER
        return ShapeSpec.rect(long_side, other, t, side)

    def normal_form(self) -> "ShapeSpec":
        """Representante preferido entre las descripciones congruentes (más cuadrado primero)."""
        return min((self, self.alternate()), key=_preference)

    def offsets(self) -> range:
        """Desplazamientos válidos de la protuberancia a lo largo de su lado."""
        return range(0, self.attached_side_length - self.k + 1) if self.k else range(1)


def _preference(spec: ShapeSpec) -> Tuple[int, int, int, int]:
    return (spec.b - spec.a, 0 if spec.side == Side.SHORTER else 1, spec.a, spec.k)


def realize(spec: ShapeSpec, offset: int = 0) -> Polyomino:
    """Poliominó canónico de la forma; `offset` ubica la protuberancia sobre su lado."""
    if spec.k and not 0 <= offset <= spec.attached_side_length - spec.k:
        raise InvalidShapeSpec(
            f"offset={offset} fuera de [0, {spec.attached_side_length - spec.k}] para {spec.label}"
        )
    cells = [(x, y) for x in range(spec.b) for y in range(spec.a)]
    if spec.k and spec.side == Side.SHORTER:
        cells += [(spec.b, offset + i) for i in range(spec.k)]
    elif spec.k:
        cells += [(offset + i, spec.a) for i in range(spec.k)]
    return Polyomino.from_cells(cells)
