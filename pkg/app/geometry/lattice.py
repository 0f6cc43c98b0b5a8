"""
Poliominós sobre ℤ²: celdas, tiras, clasificación y simetrías diédricas.

Un poliominó se guarda siempre en traslación canónica (min x = min y = 0).
Las celdas son centros de cuadrados unidad; las cajas envolventes son
semiabiertas: [0, width) × [0, height).
"""
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, Iterable, Iterator, List, NamedTuple, Set, Tuple, Union

from ..core.errors import EmptyPolyomino


class Cell(NamedTuple):
    x: int
    y: int


class Orientation(str, Enum):
    HORIZONTAL = "horizontal"
    VERTICAL = "vertical"


class ShapeClass(str, Enum):
    """Clases de la definición de convexidad (mutuamente excluyentes)."""
    DISCONNECTED = "disconnected"
    CONCAVE = "concave"
    CONVEX_NOT_CROSS = "convex_not_cross"
    CROSS_CONVEX = "cross_convex"


@dataclass(frozen=True)
class Strip:
    """Tira maximal de celdas contiguas en una fila (horizontal) o columna (vertical)."""
    orientation: Orientation
    anchor: Cell
    length: int

    @property
    def line(self) -> int:
        """Índice de la fila (y) o columna (x) que contiene la tira."""
        return self.anchor.y if self.orientation == Orientation.HORIZONTAL else self.anchor.x

    @property
    def start(self) -> int:
        return self.anchor.x if self.orientation == Orientation.HORIZONTAL else self.anchor.y

    @property
    def end(self) -> int:
        return self.start + self.length - 1

    def cells(self) -> List[Cell]:
        if self.orientation == Orientation.HORIZONTAL:
            return [Cell(self.start + i, self.line) for i in range(self.length)]
        return [Cell(self.line, self.start + i) for i in range(self.length)]


def _translate_to_origin(cells: Iterable[Tuple[int, int]]) -> FrozenSet[Cell]:
    pts = [(int(x), int(y)) for x, y in cells]
    if not pts:
        raise EmptyPolyomino("un poliominó necesita al menos una celda")
    mx = min(x for x, _ in pts)
    my = min(y for _, y in pts)
    return frozenset(Cell(x - mx, y - my) for x, y in pts)


@dataclass(frozen=True)
class Polyomino:
    """Conjunto finito y no vacío de celdas, en traslación canónica."""
    cells: FrozenSet[Cell]
    width: int = field(init=False, compare=False)
    height: int = field(init=False, compare=False)

    def __post_init__(self):
        cells = _translate_to_origin(self.cells)
        object.__setattr__(self, "cells", cells)
        object.__setattr__(self, "width", max(c.x for c in cells) + 1)
        object.__setattr__(self, "height", max(c.y for c in cells) + 1)

    @classmethod
    def from_cells(cls, cells: Iterable[Tuple[int, int]]) -> "Polyomino":
        return cls(frozenset(Cell(int(x), int(y)) for x, y in cells))

    @property
    def area(self) -> int:
        return len(self.cells)

    def __len__(self) -> int:
        return len(self.cells)

    def __contains__(self, cell) -> bool:
        return Cell(*cell) in self.cells

    def __iter__(self) -> Iterator[Cell]:
        return iter(sorted(self.cells))

    @property
    def key(self) -> Tuple[Cell, ...]:
        """Celdas ordenadas lexicográficamente (identidad hashable y ordenable)."""
        return tuple(sorted(self.cells))

    def bounding_box(self) -> Tuple[int, int, int, int]:
        """Caja semiabierta (x0, y0, x1, y1)."""
        return 0, 0, self.width, self.height

    def rows(self) -> Dict[int, List[int]]:
        """y -> lista ordenada de x ocupados."""
        out: Dict[int, List[int]] = {}
        for c in self.cells:
            out.setdefault(c.y, []).append(c.x)
        return {y: sorted(xs) for y, xs in sorted(out.items())}

    def columns(self) -> Dict[int, List[int]]:
        """x -> lista ordenada de y ocupados."""
        out: Dict[int, List[int]] = {}
        for c in self.cells:
            out.setdefault(c.x, []).append(c.y)
        return {x: sorted(ys) for x, ys in sorted(out.items())}

    def lines(self, orientation: Orientation) -> Dict[int, List[int]]:
        return self.rows() if orientation == Orientation.HORIZONTAL else self.columns()

    def to_list(self) -> List[List[int]]:
        return [[c.x, c.y] for c in self]


PolyominoLike = Union[Polyomino, Iterable[Tuple[int, int]]]


def canonicalize(p: PolyominoLike) -> Polyomino:
    """Traslada al origen (min x = min y = 0)."""
    if isinstance(p, Polyomino):
        return p
    return Polyomino.from_cells(p)


def runs(positions: List[int]) -> List[Tuple[int, int]]:
    """Tramos contiguos (inicio, longitud) de una lista ordenada de enteros."""
    out: List[Tuple[int, int]] = []
    for v in positions:
        if out and out[-1][0] + out[-1][1] == v:
            out[-1] = (out[-1][0], out[-1][1] + 1)
        else:
            out.append((v, 1))
    return out


def strips(p: Polyomino, orientation: Orientation) -> List[Strip]:
    """Tiras maximales agrupadas por fila/columna en orden lexicográfico."""
    out: List[Strip] = []
    for line, positions in p.lines(orientation).items():
        for start, length in runs(positions):
            anchor = Cell(start, line) if orientation == Orientation.HORIZONTAL else Cell(line, start)
            out.append(Strip(orientation, anchor, length))
    return out


def strip_lengths_by_line(p: Polyomino, orientation: Orientation) -> Dict[int, List[int]]:
    return {line: [n for _, n in runs(pos)] for line, pos in p.lines(orientation).items()}


def is_connected(p: Polyomino) -> bool:
    cells = p.cells
    start = next(iter(cells))
    seen: Set[Cell] = {start}
    queue = deque([start])
    while queue:
        c = queue.popleft()
        for nb in (Cell(c.x + 1, c.y), Cell(c.x - 1, c.y), Cell(c.x, c.y + 1), Cell(c.x, c.y - 1)):
            if nb in cells and nb not in seen:
                seen.add(nb)
                queue.append(nb)
    return len(seen) == len(cells)


def is_line_convex(p: Polyomino) -> bool:
    """Cada fila y cada columna es una sola tira."""
    return all(len(runs(pos)) == 1 for o in Orientation for pos in p.lines(o).values())


def has_full_row(p: Polyomino) -> bool:
    return any(len(xs) == p.width for xs in p.rows().values())


def has_full_column(p: Polyomino) -> bool:
    return any(len(ys) == p.height for ys in p.columns().values())


def classify(p: Polyomino) -> ShapeClass:
    if not is_connected(p):
        return ShapeClass.DISCONNECTED
    if not is_line_convex(p):
        return ShapeClass.CONCAVE
    # rectángulos de altura u ≥ 1 y anchura w ≥ 1 que abarcan la caja
    if has_full_row(p) and has_full_column(p):
        return ShapeClass.CROSS_CONVEX
    return ShapeClass.CONVEX_NOT_CROSS


_DIHEDRAL = (
    lambda x, y: (x, y),
    lambda x, y: (-y, x),
    lambda x, y: (-x, -y),
    lambda x, y: (y, -x),
    lambda x, y: (-x, y),
    lambda x, y: (y, x),
    lambda x, y: (x, -y),
    lambda x, y: (-y, -x),
)


def transform(p: Polyomino, index: int) -> Polyomino:
    """Aplica el elemento `index` (0..7) del grupo diédrico."""
    f = _DIHEDRAL[index]
    return Polyomino.from_cells(f(c.x, c.y) for c in p.cells)


def rotate(p: Polyomino, quarter_turns: int = -1) -> Polyomino:
    """Rotación por quarter_turns·π/2 (negativo = sentido horario)."""
    return transform(p, quarter_turns % 4)


def reflect(p: Polyomino) -> Polyomino:
    return transform(p, 4)


def symmetries(p: Polyomino) -> Set[Polyomino]:
    """Órbita diédrica, cada imagen canonicalizada."""
    return {transform(p, i) for i in range(8)}


def orbit_key(p: Polyomino) -> Tuple[Cell, ...]:
    """Representante mínimo de la órbita diédrica."""
    return min(q.key for q in symmetries(p))


def rectangle(width: int, height: int) -> Polyomino:
    return Polyomino.from_cells((x, y) for x in range(width) for y in range(height))
