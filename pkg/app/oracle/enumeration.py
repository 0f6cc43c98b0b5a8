"""
Oráculo por fuerza bruta.

Enumera todos los poliominós fijos conexos de área n (algoritmo de Redelmeier,
con una segunda estrategia por crecimiento para validar recuentos), muestrea
configuraciones desconexas y comprueba sobre ellas el teorema de minimizadores
y la reducción estricta del algoritmo principal.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Set, Tuple

import numpy as np

from ..catalog.minimizers import catalog_realizations
from ..core import metrics
from ..core.errors import AreaTooLarge, NonTermination, TheoremViolation
from ..core.metrics import LatencyTimer
from ..core.settings import settings
from ..geometry.lattice import Cell, Polyomino, is_connected, orbit_key
from ..reduction.algorithms import TerminalClass, main_algorithm
from ..reduction.moves import is_in_extended_catalog, total_perimeter
from ..special.zeta import ZetaEngine

logger = logging.getLogger(__name__)

_STEPS = ((1, 0), (-1, 0), (0, 1), (0, -1))


def _check_area(n: int):
    if n < 1:
        raise ValueError(f"el área debe ser ≥ 1 (n={n})")
    if n > settings.ENUMERATION_MAX_AREA:
        raise AreaTooLarge(f"n={n} supera el tope de enumeración {settings.ENUMERATION_MAX_AREA}")


def _admissible(cell: Tuple[int, int]) -> bool:
    # semiplano de Redelmeier: y > 0, o y = 0 y x ≥ 0
    return cell[1] > 0 or (cell[1] == 0 and cell[0] >= 0)


def enumerate_connected(n: int) -> Iterator[Polyomino]:
    """Cada poliominó fijo conexo de área n exactamente una vez, en traslación canónica."""
    _check_area(n)
    poly: List[Tuple[int, int]] = []
    reached: Set[Tuple[int, int]] = {(0, 0)}

    def grow(untried: List[Tuple[int, int]]) -> Iterator[Polyomino]:
        untried = list(untried)
        while untried:
            cell = untried.pop()
            poly.append(cell)
            if len(poly) == n:
                yield Polyomino.from_cells(poly)
            else:
                new = []
                for dx, dy in _STEPS:
                    nb = (cell[0] + dx, cell[1] + dy)
                    if _admissible(nb) and nb not in reached:
                        new.append(nb)
                reached.update(new)
                yield from grow(untried + new)
                reached.difference_update(new)
            poly.pop()

    yield from grow([(0, 0)])


def enumerate_by_growth(n: int) -> List[Polyomino]:
    """Segunda estrategia: crecimiento celda a celda con deduplicación por forma canónica."""
    _check_area(n)
    level: Dict[Tuple[Cell, ...], Polyomino] = {}
    seed = Polyomino.from_cells([(0, 0)])
    level[seed.key] = seed
    for _ in range(n - 1):
        nxt: Dict[Tuple[Cell, ...], Polyomino] = {}
        for p in level.values():
            for c in p.cells:
                for dx, dy in _STEPS:
                    nb = Cell(c.x + dx, c.y + dy)
                    if nb in p.cells:
                        continue
                    grown = Polyomino(p.cells | {nb})
                    nxt.setdefault(grown.key, grown)
        level = nxt
    return [level[k] for k in sorted(level)]


def _random_connected(size: int, rng: np.random.Generator) -> Set[Cell]:
    cells = [Cell(0, 0)]
    occupied = {cells[0]}
    while len(cells) < size:
        base = cells[int(rng.integers(len(cells)))]
        dx, dy = _STEPS[int(rng.integers(4))]
        nb = Cell(base.x + dx, base.y + dy)
        if nb not in occupied:
            occupied.add(nb)
            cells.append(nb)
    return occupied


def sample_disconnected(n: int, samples: Optional[int] = None, seed: Optional[int] = None) -> List[Polyomino]:
    """
    Configuraciones de dos componentes conexas de área total n dentro de una
    caja 3n × 3n, con semilla fija para reproducibilidad.
    """
    if n < 2:
        raise ValueError(f"una configuración desconexa necesita n ≥ 2 (n={n})")
    samples = settings.DISCONNECTED_SAMPLES if samples is None else samples
    rng = np.random.default_rng(settings.DEFAULT_SEED if seed is None else seed)
    box = 3 * n
    out: List[Polyomino] = []
    while len(out) < samples:
        n1 = int(rng.integers(1, n))
        parts = [_random_connected(n1, rng), _random_connected(n - n1, rng)]
        placed: Set[Cell] = set()
        for part in parts:
            width = max(c.x for c in part) - min(c.x for c in part) + 1
            height = max(c.y for c in part) - min(c.y for c in part) + 1
            ox = int(rng.integers(0, box - width + 1)) - min(c.x for c in part)
            oy = int(rng.integers(0, box - height + 1)) - min(c.y for c in part)
            placed |= {Cell(c.x + ox, c.y + oy) for c in part}
        if len(placed) != n:
            continue
        candidate = Polyomino(frozenset(placed))
        if not is_connected(candidate):
            out.append(candidate)
    return out


def _perimeters(shapes: List[Polyomino], engine: ZetaEngine) -> List[float]:
    with ThreadPoolExecutor(max_workers=settings.WORKERS) as pool:
        return list(pool.map(lambda p: total_perimeter(p, engine), shapes))


@dataclass
class EnumerationReport:
    n: int
    lam: float
    count_connected: int
    global_min: float
    argmin_orbits: List[Tuple[Cell, ...]]
    verified_against_catalog: bool
    disconnected_samples: int = 0
    disconnected_min: Optional[float] = None

    def to_dict(self) -> Dict:
        return {
            "n": self.n,
            "lambda": self.lam,
            "count_connected": self.count_connected,
            "global_min": self.global_min,
            "argmin_orbits": [[list(c) for c in key] for key in self.argmin_orbits],
            "verified_against_catalog": self.verified_against_catalog,
            "disconnected_samples": self.disconnected_samples,
            "disconnected_min": self.disconnected_min,
        }


def verify_theorem(
    n: int,
    engine: ZetaEngine,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
) -> EnumerationReport:
    """
    Argmin exhaustivo de Per_λ entre los poliominós conexos de área n y
    comprobación de que cae en las órbitas de 𝓜ₙ; las configuraciones
    desconexas muestreadas deben superar el mínimo conexo.

    Raises:
        TheoremViolation: con el contraejemplo
    """
    timer = LatencyTimer()
    if engine.lam <= settings.LAMBDA_THEOREM_MIN:
        logger.warning(f"[Oracle] λ={engine.lam} ≤ {settings.LAMBDA_THEOREM_MIN}: el teorema no cubre este λ")
    shapes = list(enumerate_connected(n))
    values = _perimeters(shapes, engine)
    global_min = min(values)
    margin = settings.COMPARISON_MARGIN
    argmin = sorted({orbit_key(p) for p, v in zip(shapes, values) if v <= global_min + margin})
    allowed = catalog_realizations(n)
    for key in argmin:
        if key not in allowed:
            raise TheoremViolation(
                f"n={n}, λ={engine.lam}: el mínimo lo alcanza una forma fuera de 𝓜ₙ",
                counterexample=Polyomino(frozenset(key)),
            )

    report = EnumerationReport(
        n=n,
        lam=engine.lam,
        count_connected=len(shapes),
        global_min=global_min,
        argmin_orbits=argmin,
        verified_against_catalog=True,
    )
    if n >= 2:
        disconnected = sample_disconnected(n, samples, seed)
        d_values = _perimeters(disconnected, engine)
        for p, v in zip(disconnected, d_values):
            if v <= global_min + margin:
                raise TheoremViolation(
                    f"n={n}, λ={engine.lam}: configuración desconexa con Per={v:.12g} ≤ mínimo {global_min:.12g}",
                    counterexample=p,
                )
        report.disconnected_samples = len(disconnected)
        report.disconnected_min = min(d_values)

    metrics.record_compute("enumerated", count=len(shapes), ms=timer.elapsed_ms())
    logger.info(f"[Oracle] n={n} λ={engine.lam}: {len(shapes)} conexos, mínimo {global_min:.12g}")
    return report


@dataclass
class ReductionConsistencyReport:
    n: int
    lam: float
    checked: int = 0
    skipped: int = 0
    violations: List[Polyomino] = field(default_factory=list)
    non_terminating: List[Polyomino] = field(default_factory=list)
    fallbacks: List[Polyomino] = field(default_factory=list)
    min_decrease: Optional[float] = None
    max_decrease: Optional[float] = None

    @property
    def ok(self) -> bool:
        return not self.violations and not self.non_terminating

    def record(self, decrease: float):
        self.min_decrease = decrease if self.min_decrease is None else min(self.min_decrease, decrease)
        self.max_decrease = decrease if self.max_decrease is None else max(self.max_decrease, decrease)

    def to_dict(self) -> Dict:
        return {
            "n": self.n,
            "lambda": self.lam,
            "checked": self.checked,
            "skipped": self.skipped,
            "violations": [p.to_list() for p in self.violations],
            "non_terminating": [p.to_list() for p in self.non_terminating],
            "fallbacks": [p.to_list() for p in self.fallbacks],
            "min_decrease": self.min_decrease,
            "max_decrease": self.max_decrease,
            "ok": self.ok,
        }


def verify_reduction_consistency(n: int, engine: ZetaEngine) -> ReductionConsistencyReport:
    """main_algorithm reduce estrictamente todo poliominó conexo de área n fuera de 𝓜ₙᵉˣᵗ."""
    report = ReductionConsistencyReport(n=n, lam=engine.lam)
    for p in enumerate_connected(n):
        if is_in_extended_catalog(p):
            report.skipped += 1
            continue
        report.checked += 1
        try:
            trace = main_algorithm(p, engine)
        except NonTermination:
            report.non_terminating.append(p)
            continue
        if trace.terminal_class != TerminalClass.REDUCED:
            report.violations.append(p)
        else:
            report.record(trace.decrease)
        if any(s.label.startswith("fallback") for s in trace.steps):
            report.fallbacks.append(p)
    if not report.ok:
        logger.warning(
            f"[Oracle] n={n} λ={engine.lam}: {len(report.violations)} sin reducción, "
            f"{len(report.non_terminating)} sin terminar"
        )
    if report.fallbacks:
        logger.info(f"[Oracle] n={n} λ={engine.lam}: {len(report.fallbacks)} reducción(es) por respaldo")
    return report
