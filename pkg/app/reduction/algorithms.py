"""
Algoritmo principal de reducción y algoritmo para poliominós cross-convex.

Dado P ∉ 𝓜ₙᵉˣᵗ ambos construyen una sucesión de poliominós de la misma área y
perímetro no creciente cuyo último elemento tiene Per_λ estrictamente menor.
Cada paso se comprueba numéricamente. Cuando la forma intermedia ya está en
𝓜ₙᵉˣᵗ se salta al minimizador del catálogo (paso "ext"); los pasos
`fallback-*` solo aparecen si ninguna construcción analítica baja Per.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Set, Tuple

from ..catalog.minimizers import argmin_shape
from ..core import metrics
from ..core.errors import NonTermination, PreconditionViolated, VerificationError
from ..core.metrics import LatencyTimer
from ..core.settings import settings
from ..geometry.lattice import Cell, Polyomino, ShapeClass, classify, rotate, transform
from ..geometry.shapes import realize
from ..special.zeta import ZetaEngine
from .moves import (
    chessboard_exchange,
    convexify,
    fill_holes_step,
    is_in_extended_catalog,
    relocate_best_cell,
    strictly_smaller,
    total_perimeter,
)

logger = logging.getLogger(__name__)


class TerminalClass(str, Enum):
    EXTENDED_CATALOG = "extended_catalog"
    REDUCED = "reduced_strictly"
    NOT_REDUCED = "not_reduced"


@dataclass(frozen=True)
class ReductionStep:
    label: str
    polyomino: Polyomino
    perimeter: float
    bound: Optional[float] = None

    def to_dict(self) -> Dict:
        out = {"step": self.label, "perimeter": self.perimeter, "cells": self.polyomino.to_list()}
        if self.bound is not None:
            out["bound"] = self.bound
        return out


@dataclass
class ReductionTrace:
    initial: Polyomino
    initial_perimeter: float
    steps: List[ReductionStep] = field(default_factory=list)
    rotated: bool = False
    terminal_class: TerminalClass = TerminalClass.NOT_REDUCED

    @property
    def terminal(self) -> Polyomino:
        return self.steps[-1].polyomino if self.steps else self.initial

    @property
    def perimeter(self) -> float:
        return self.steps[-1].perimeter if self.steps else self.initial_perimeter

    def add(self, label: str, polyomino: Polyomino, perimeter: float, bound: Optional[float] = None):
        if polyomino.area != self.initial.area:
            raise VerificationError(f"paso {label}: área {polyomino.area} ≠ {self.initial.area}")
        if perimeter > self.perimeter + settings.COMPARISON_MARGIN:
            raise VerificationError(f"paso {label}: Per sube de {self.perimeter:.12g} a {perimeter:.12g}")
        self.steps.append(ReductionStep(label, polyomino, perimeter, bound))
        logger.debug(f"[Reduction] paso {label}: Per={perimeter:.12g}")

    def close(self) -> "ReductionTrace":
        if self.terminal_class != TerminalClass.EXTENDED_CATALOG:
            reduced = strictly_smaller(self.perimeter, self.initial_perimeter)
            self.terminal_class = TerminalClass.REDUCED if reduced else TerminalClass.NOT_REDUCED
        return self

    @property
    def decrease(self) -> float:
        return self.initial_perimeter - self.perimeter

    def to_dict(self) -> Dict:
        return {
            "initial_perimeter": self.initial_perimeter,
            "terminal_perimeter": self.perimeter,
            "terminal_class": self.terminal_class.value,
            "rotated": self.rotated,
            "terminal": self.terminal.to_list(),
            "steps": [s.to_dict() for s in self.steps],
        }


def _to_catalog(trace: ReductionTrace, current: Polyomino, engine: ZetaEngine) -> bool:
    """Sustituye una forma de 𝓜ₙᵉˣᵗ por el minimizador del catálogo si éste es estrictamente menor."""
    best = argmin_shape(current.area, engine)[0]
    if strictly_smaller(best.nonlocal_perimeter, trace.perimeter):
        trace.add("ext", realize(best.spec), best.nonlocal_perimeter)
        return True
    return False


def _fallback(trace: ReductionTrace, current: Polyomino, engine: ZetaEngine):
    """Traslado de la mejor celda o, si no baja Per, el minimizador del catálogo."""
    candidate = relocate_best_cell(current, engine)
    if candidate is not None:
        value = total_perimeter(candidate, engine)
        if strictly_smaller(value, trace.perimeter):
            trace.add("fallback-relocation", candidate, value)
            return
    best = argmin_shape(current.area, engine)[0]
    if strictly_smaller(best.nonlocal_perimeter, trace.perimeter):
        trace.add("fallback-catalog", realize(best.spec), best.nonlocal_perimeter)
        return
    logger.warning(f"[Reduction] sin reducción estricta para n={current.area}, λ={engine.lam}")


def _append_cross_convex(trace: ReductionTrace, current: Polyomino, engine: ZetaEngine):
    sub = cross_convex_algorithm(current, engine)
    for step in sub.steps:
        trace.add(f"5.2.b/{step.label}", step.polyomino, step.perimeter, step.bound)


def _conclude(trace: ReductionTrace, current: Polyomino, engine: ZetaEngine, label: str):
    """
    Convexificación sin disminución estricta: si conserva Per, la forma
    convexa se cierra con el catálogo (si está en 𝓜ₙᵉˣᵗ) o con el algoritmo
    cross-convex.
    """
    convex = convexify(current)
    value = total_perimeter(convex, engine)
    if value <= trace.perimeter + settings.COMPARISON_MARGIN:
        if is_in_extended_catalog(convex):
            trace.add(label, convex, value)
            if _to_catalog(trace, convex, engine):
                return
            current = convex
        elif classify(convex) == ShapeClass.CROSS_CONVEX:
            trace.add(label, convex, value)
            _append_cross_convex(trace, convex, engine)
            return
    _fallback(trace, current, engine)


def _top_columns_full(p: Polyomino) -> bool:
    columns = p.columns()
    return all(len(columns[x]) == p.height for x in p.rows()[p.height - 1])


def _accept_if_smaller(candidate: Polyomino, reference: float, engine: ZetaEngine):
    value = total_perimeter(candidate, engine)
    return (candidate, value) if strictly_smaller(value, reference) else None


def main_algorithm(p: Polyomino, engine: ZetaEngine) -> ReductionTrace:
    """
    Reduce P hasta un poliominó de Per_λ estrictamente menor.

    Pasos 1–3 rellenan huecos columna a columna (3.1 para en la primera
    disminución estricta, 3.2 continúa con Per igual); el paso 4 rota −π/2 una
    sola vez; el paso 5 cierra huecos (5.1), avanza de columna o convexifica
    (5.2.a) o delega en el algoritmo cross-convex (5.2.b).

    Raises:
        NonTermination: al superar ITERATION_CAP_FACTOR·n² iteraciones
    """
    timer = LatencyTimer()
    trace = ReductionTrace(initial=p, initial_perimeter=total_perimeter(p, engine))
    if is_in_extended_catalog(p):
        trace.terminal_class = TerminalClass.EXTENDED_CATALOG
        return trace

    cap = settings.ITERATION_CAP_FACTOR * p.area ** 2
    current, t = p, 0
    for _ in range(cap):
        if t + 1 < current.width:
            nxt, changed, strict = fill_holes_step(current, engine, t)
            if changed:
                trace.add("3.1" if strict else "3.2", nxt, total_perimeter(nxt, engine))
                if strict:
                    break
                current = nxt
                continue

        if t == 0 and not trace.rotated and not _top_columns_full(current):
            current = rotate(current, -1)
            trace.rotated = True
            trace.add("4", current, trace.perimeter)
            continue

        shape_class = classify(current)
        if shape_class in (ShapeClass.DISCONNECTED, ShapeClass.CONCAVE):
            candidate = chessboard_exchange(current, engine)
            accepted = (candidate, total_perimeter(candidate, engine)) if candidate is not None else None
            accepted = accepted or _accept_if_smaller(convexify(current), trace.perimeter, engine)
            if accepted:
                trace.add("5.1", *accepted)
            else:
                _conclude(trace, current, engine, "5.1")
            break

        if shape_class == ShapeClass.CONVEX_NOT_CROSS:
            if t + 2 < current.width:
                t += 1
                continue
            accepted = _accept_if_smaller(convexify(current), trace.perimeter, engine)
            if accepted:
                trace.add("5.2.a", *accepted)
            else:
                _conclude(trace, current, engine, "5.2.a")
            break

        if is_in_extended_catalog(current):
            if not _to_catalog(trace, current, engine):
                _fallback(trace, current, engine)
            break
        _append_cross_convex(trace, current, engine)
        break
    else:
        raise NonTermination(
            f"la reducción superó {cap} iteraciones (n={p.area}, λ={engine.lam})",
            polyomino=current,
            steps=trace.steps,
        )

    metrics.record_compute("reduction", ms=timer.elapsed_ms())
    return trace.close()


def _justify(p: Polyomino, engine: ZetaEngine, transpose: bool) -> Polyomino:
    """
    Pasos 1–2 (3–4 si transpose). Recorre las columnas de izquierda a derecha
    dentro del rectángulo envolvente fijo; si las filas que corta la tira de la
    columna no miden todas lo mismo, cada celda de la tira que abre su fila pasa
    a la casilla vacía que sigue al final de esa fila. El movimiento de una
    columna se descarta si sube Per o rompe la cross-convexidad.
    """
    base = transform(p, 5) if transpose else p
    width = base.width
    cells: Set[Tuple[int, int]] = {(c.x, c.y) for c in base.cells}
    reference = total_perimeter(base, engine)
    for x in range(width):
        column = sorted(y for cx, y in cells if cx == x)
        rows = {y: sorted(cx for cx, cy in cells if cy == y) for y in column}
        if len({len(xs) for xs in rows.values()}) <= 1:
            continue
        moved = [y for y, xs in rows.items() if xs[0] == x and xs[-1] + 1 < width]
        if not moved:
            continue
        candidate = (cells - {(x, y) for y in moved}) | {(rows[y][-1] + 1, y) for y in moved}
        shape = Polyomino.from_cells(candidate)
        value = total_perimeter(shape, engine)
        if classify(shape) != ShapeClass.CROSS_CONVEX or value > reference + settings.COMPARISON_MARGIN:
            logger.debug(f"[Reduction] columna {x}: movimiento descartado (Per={value:.12g})")
            continue
        cells, reference = candidate, value
    result = Polyomino.from_cells(cells)
    return transform(result, 5) if transpose else result


def _step6(d: Polyomino, l_sh: int, l_sv: int) -> Optional[Polyomino]:
    """Quita la primera tira vertical y la reubica como tira horizontal bajo la primera fila."""
    if d.width < 2:
        return None
    cells = {c for c in d.cells if c.x != 0}
    bottom = min(c.y for c in cells)
    x0 = min(c.x for c in cells if c.y == bottom)
    cells |= {Cell(x0 + i, bottom - 1) for i in range(l_sv)}
    return Polyomino.from_cells(cells)


def _step7(d: Polyomino, l_sh: int, l_sv: int) -> Optional[Polyomino]:
    """Quita la primera tira horizontal y rellena columnas, las más cercanas primero, hasta la altura."""
    if d.height < 2:
        return None
    first_row = d.rows()[0]
    cells = {c for c in d.cells if c.y != 0}
    tops: Dict[int, int] = {}
    for c in cells:
        tops[c.x] = max(tops.get(c.x, c.y), c.y)

    def distance(x: int) -> int:
        return max(first_row[0] - x, x - first_row[-1], 0)

    remaining = l_sh
    for x in sorted(tops, key=lambda x: (distance(x), x)):
        while remaining and tops[x] + 1 < d.height:
            tops[x] += 1
            cells.add(Cell(x, tops[x]))
            remaining -= 1
    x, y = max(tops) + 1, 1
    while remaining:
        cells.add(Cell(x, y))
        remaining -= 1
        y += 1
        if y >= d.height:
            x, y = x + 1, 1
    return Polyomino.from_cells(cells)


def _orientations(d: Polyomino) -> List[Polyomino]:
    """Imágenes diédricas de 𝒟″ con m_v ≤ m_h; primero la del enunciado (a lo sumo transpuesta)."""
    out = [transform(d, 5) if d.height > d.width else d]
    for i in range(8):
        image = transform(d, i)
        if image.height <= image.width and image not in out:
            out.append(image)
    return out


def cross_convex_algorithm(c: Polyomino, engine: ZetaEngine) -> ReductionTrace:
    """
    Construye 𝒟′ (pasos 1–2, filas) y 𝒟″ (pasos 3–4, columnas) con el mismo
    Per_λ y después reubica la primera tira vertical (paso 6, si l_Sh ≥ l_Sv)
    o la primera horizontal (paso 7). La elección m_v ≤ m_h se recorre sobre
    todas las imágenes diédricas de 𝒟″; si ninguna baja Per y 𝒟″ ya está en
    𝓜ₙᵉˣᵗ se pasa al minimizador del catálogo.

    Raises:
        PreconditionViolated: si C no es cross-convex o ya está en 𝓜ₙᵉˣᵗ
    """
    if classify(c) != ShapeClass.CROSS_CONVEX:
        raise PreconditionViolated(f"el poliominó no es cross-convex ({classify(c).value})")
    if is_in_extended_catalog(c):
        raise PreconditionViolated("el poliominó ya pertenece a 𝓜ₙᵉˣᵗ")

    trace = ReductionTrace(initial=c, initial_perimeter=total_perimeter(c, engine))
    d1 = _justify(c, engine, transpose=False)
    trace.add("1-2", d1, total_perimeter(d1, engine))
    d2 = _justify(d1, engine, transpose=True)
    trace.add("3-4", d2, total_perimeter(d2, engine))

    for oriented in _orientations(d2):
        l_sh = len(oriented.rows()[0])
        l_sv = len(oriented.columns()[0])
        builders = [("6", _step6), ("7", _step7)]
        if l_sh < l_sv:
            builders.reverse()
        for label, build in builders:
            candidate = build(oriented, l_sh, l_sv)
            if candidate is None:
                continue
            value = total_perimeter(candidate, engine)
            if strictly_smaller(value, trace.perimeter):
                bound = l_sv * engine.power(oriented.height) if label == "6" else None
                trace.add(label, candidate, value, bound)
                return trace.close()
    if is_in_extended_catalog(d2) and _to_catalog(trace, d2, engine):
        return trace.close()
    _fallback(trace, d2, engine)
    return trace.close()
