"""
Movimientos elementales de reducción.

Todos son transformaciones puras Polyomino -> Polyomino que conservan el área.
Los que no garantizan por construcción un perímetro no creciente devuelven el
candidato y dejan la comprobación a quien los llama.
"""
import logging
from typing import Iterable, Optional, Set, Tuple

from ..core.errors import CollisionWithOccupiedCells, PreconditionViolated, StripNotFound
from ..core.settings import settings
from ..geometry.lattice import Cell, Orientation, Polyomino, Strip, strips
from ..perimeter.nonlocal_perimeter import perimeter
from ..special.zeta import ZetaEngine

logger = logging.getLogger(__name__)


def total_perimeter(p: Polyomino, engine: ZetaEngine) -> float:
    return perimeter(p, engine).total


def strictly_smaller(new: float, old: float) -> bool:
    return new < old - settings.COMPARISON_MARGIN


def _along(cell: Cell, orientation: Orientation, delta: int) -> Cell:
    if orientation == Orientation.HORIZONTAL:
        return Cell(cell.x + delta, cell.y)
    return Cell(cell.x, cell.y + delta)


def shift_strip(p: Polyomino, strip: Strip, delta: int) -> Polyomino:
    """
    Desplaza una tira maximal `delta` posiciones a lo largo de su línea, hacia
    la tira vecina de la misma fila/columna, sin llegar a solaparla.

    Raises:
        StripNotFound: la tira no es maximal en P
        CollisionWithOccupiedCells: alguna celda destino ya está ocupada
        PreconditionViolated: delta = 0, sin vecina en esa dirección o la distancia no se reduce
    """
    line_strips = [s for s in strips(p, strip.orientation) if s.line == strip.line]
    if strip not in line_strips:
        raise StripNotFound(f"{strip} no es una tira maximal del poliominó")
    if delta == 0:
        raise PreconditionViolated("delta debe ser distinto de 0")
    if delta < 0:
        neighbours = [s for s in line_strips if s.end < strip.start]
        gap = strip.start - max(s.end for s in neighbours) if neighbours else None
    else:
        neighbours = [s for s in line_strips if s.start > strip.end]
        gap = min(s.start for s in neighbours) - strip.end if neighbours else None
    if gap is None:
        raise PreconditionViolated(f"no hay tira vecina en la dirección de delta={delta}")
    own = set(strip.cells())
    target = [_along(c, strip.orientation, delta) for c in own]
    hits = [c for c in target if c in p.cells and c not in own]
    if hits:
        raise CollisionWithOccupiedCells(f"celdas ocupadas en el destino: {sorted(hits)}")
    if not 1 <= gap - abs(delta) < gap:
        raise PreconditionViolated(f"el desplazamiento {delta} no reduce la distancia {gap}")
    return Polyomino.from_cells((p.cells - own) | set(target))


def column_sort(p: Polyomino, t: int) -> Polyomino:
    """Pasa a la columna t+1 las celdas de la columna t cuya fila está vacía en t+1."""
    cells = set(p.cells)
    moved = [c for c in cells if c.x == t and Cell(t + 1, c.y) not in cells]
    for c in moved:
        cells.discard(c)
        cells.add(Cell(t + 1, c.y))
    return Polyomino.from_cells(cells)


def fill_holes_step(p: Polyomino, engine: ZetaEngine, t: int = 0) -> Tuple[Polyomino, bool, bool]:
    """
    Pasos 1–3 sobre la columna t: rellena los huecos de la columna t+1 en las
    filas de las tiras de la columna t con traslaciones horizontales unitarias.

    En la columna más a la izquierda el movimiento nunca aumenta Per (la parte
    vertical es submodular y cada celda movida se acerca a su fila); en
    columnas interiores se comprueba y se descarta si Per crece.

    Returns:
        (P', cambió, disminución estricta)
    """
    candidate = column_sort(p, t)
    if candidate == p:
        return p, False, False
    before, after = total_perimeter(p, engine), total_perimeter(candidate, engine)
    if after > before + settings.COMPARISON_MARGIN:
        logger.debug(f"[Reduction] columna {t}: el relleno aumentaría Per, se descarta")
        return p, False, False
    return candidate, True, strictly_smaller(after, before)


def convexify(p: Polyomino) -> Polyomino:
    """Justifica cada fila a la izquierda y luego cada columna abajo."""
    rows = [(y, len(xs)) for y, xs in p.rows().items()]
    cells = {Cell(x, y) for y, count in rows for x in range(count)}
    columns = {}
    for c in cells:
        columns[c.x] = columns.get(c.x, 0) + 1
    return Polyomino.from_cells((x, y) for x, count in columns.items() for y in range(count))


def _gap_closing_moves(p: Polyomino) -> Iterable[Polyomino]:
    for orientation in (Orientation.HORIZONTAL, Orientation.VERTICAL):
        by_line = {}
        for s in strips(p, orientation):
            by_line.setdefault(s.line, []).append(s)
        for line_strips in by_line.values():
            for first, second in zip(line_strips, line_strips[1:]):
                gap = second.start - first.end
                for strip, delta in ((second, -(gap - 1)), (first, gap - 1)):
                    try:
                        yield shift_strip(p, strip, delta)
                    except (CollisionWithOccupiedCells, PreconditionViolated):
                        continue


def chessboard_exchange(p: Polyomino, engine: ZetaEngine) -> Optional[Polyomino]:
    """
    Paso 5.1: cierra el hueco entre dos tiras de una misma línea desplazando
    una de ellas contra la otra. Devuelve el mejor candidato con Per
    estrictamente menor, o None.
    """
    before = total_perimeter(p, engine)
    best: Optional[Tuple[float, Polyomino]] = None
    for candidate in _gap_closing_moves(p):
        value = total_perimeter(candidate, engine)
        if strictly_smaller(value, before) and (best is None or value < best[0]):
            best = (value, candidate)
    return best[1] if best else None


def relocate_best_cell(p: Polyomino, engine: ZetaEngine) -> Optional[Polyomino]:
    """Mejor traslado de una celda a una casilla vacía adyacente al resto, si baja Per."""
    before = total_perimeter(p, engine)
    best: Optional[Tuple[float, Tuple[Cell, ...], Polyomino]] = None
    for cell in sorted(p.cells):
        rest = p.cells - {cell}
        if not rest:
            continue
        targets: Set[Cell] = set()
        for c in rest:
            for nb in (Cell(c.x + 1, c.y), Cell(c.x - 1, c.y), Cell(c.x, c.y + 1), Cell(c.x, c.y - 1)):
                if nb not in rest and nb != cell:
                    targets.add(nb)
        for target in sorted(targets):
            candidate = Polyomino.from_cells(rest | {target})
            value = total_perimeter(candidate, engine)
            if strictly_smaller(value, before) and (best is None or (value, candidate.key) < best[:2]):
                best = (value, candidate.key, candidate)
    return best[2] if best else None


def is_in_extended_catalog(p: Polyomino) -> bool:
    """
    Pertenencia estructural a 𝓜ₙᵉˣᵗ: rectángulo, o rectángulo más una tira
    enrasada de longitud 1 ≤ k < lado en una fila o columna extrema.
    """
    w, h = p.width, p.height
    if p.area == w * h:
        return True
    rows, columns = p.rows(), p.columns()
    extremes = []
    if h >= 2:
        extremes += [(rows[0], w, w * (h - 1)), (rows[h - 1], w, w * (h - 1))]
    if w >= 2:
        extremes += [(columns[0], h, h * (w - 1)), (columns[w - 1], h, h * (w - 1))]
    for positions, side, body_area in extremes:
        single_strip = positions[-1] - positions[0] + 1 == len(positions)
        # el resto llena la caja sin la línea extrema
        if single_strip and len(positions) < side and p.area - len(positions) == body_area:
            return True
    return False
