"""
Perímetro no local bi-axial Per_λ.

Per_λ(P) = Σ_{x∈P} Σ_{y∉P, y en la fila o columna de x} |x−y|^{-λ}.

Cada fila (columna) se evalúa desde su lista de tiras: una tira de longitud l
aporta 2 Σ_{i=1}^{l} ζ(λ, i) y cada par ordenado de tiras de la misma línea
resta su interacción finita Σ_{x∈S_j} Σ_{y∈S_m} |x−y|^{-λ}.
"""
import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List, Sequence

import numpy as np

from ..core import metrics
from ..core.errors import WindowTooSmall
from ..core.metrics import LatencyTimer
from ..core.settings import settings
from ..geometry.lattice import Orientation, Polyomino, runs
from ..geometry.shapes import ShapeSpec, Side
from ..special.zeta import ZetaEngine, power_sum

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PerimeterBreakdown:
    horizontal: float
    vertical: float
    total: float = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "total", self.horizontal + self.vertical)

    def to_dict(self) -> Dict[str, float]:
        return {"horizontal": self.horizontal, "vertical": self.vertical, "total": self.total}


def strip_interaction(l1: int, l2: int, d: int, engine: ZetaEngine) -> float:
    """
    Σ_{x∈S_1} Σ_{y∈S_2} |x−y|^{-λ} para dos tiras colineales de longitudes l1, l2
    cuyos extremos enfrentados están a distancia d ≥ 1.
    """
    if d < 1:
        raise ValueError(f"distancia entre tiras debe ser ≥ 1 (d={d})")
    m = d + l1 + l2 - 2
    if m <= settings.PREFIX_TABLE_MAX:
        table = power_sum(engine, m)
        i = np.arange(1, l1 + 1)
        return float(np.sum(table[d + i + l2 - 2] - table[d + i - 2]))
    # tiras lejanas: Σ_i [ζ(λ, d+i−1) − ζ(λ, d+i+l2−1)] sin tabla
    return math.fsum(
        engine.zeta_real(d + i - 1) - engine.zeta_real(d + i + l2 - 1) for i in range(1, l1 + 1)
    )


def line_contribution(positions: Sequence[int], engine: ZetaEngine) -> float:
    """Contribución de una fila/columna dada la lista ordenada de posiciones ocupadas."""
    segments = runs(list(positions))
    boundary = math.fsum(2.0 * engine.zeta_sum(n) for _, n in segments)
    cross = []
    for j, (s1, n1) in enumerate(segments):
        for s2, n2 in segments[j + 1:]:
            cross.append(2.0 * strip_interaction(n1, n2, s2 - (s1 + n1 - 1), engine))
    return boundary - math.fsum(cross)


def _axis_part(p: Polyomino, orientation: Orientation, engine: ZetaEngine) -> float:
    return math.fsum(line_contribution(pos, engine) for pos in p.lines(orientation).values())


def perimeter(p: Polyomino, engine: ZetaEngine) -> PerimeterBreakdown:
    """Per_λ por la fórmula de tiras, con el reparto horizontal/vertical."""
    timer = LatencyTimer()
    result = PerimeterBreakdown(
        horizontal=_axis_part(p, Orientation.HORIZONTAL, engine),
        vertical=_axis_part(p, Orientation.VERTICAL, engine),
    )
    metrics.record_compute("perimeter", ms=timer.elapsed_ms())
    return result


def perimeter_direct(p: Polyomino, engine: ZetaEngine, window: int) -> PerimeterBreakdown:
    """
    Oráculo: doble suma literal sobre el complemento axial dentro de la ventana,
    más las colas analíticas ζ(λ, window+1) de cada semirrecta.
    """
    if window < max(p.width, p.height):
        raise WindowTooSmall(
            f"ventana {window} menor que la extensión del poliominó ({p.width}×{p.height})"
        )
    r = np.arange(1, window + 1)
    weights = r.astype(np.float64) ** (-engine.lam)
    tail = engine.zeta(window + 1)
    parts: List[float] = []
    for orientation in (Orientation.HORIZONTAL, Orientation.VERTICAL):
        terms: List[float] = []
        for positions in p.lines(orientation).values():
            occupied = np.asarray(positions)
            for x in positions:
                for sign in (1, -1):
                    outside = ~np.isin(x + sign * r, occupied)
                    terms.append(float(np.sum(weights[outside])))
                    terms.append(tail)
        parts.append(math.fsum(terms))
    return PerimeterBreakdown(horizontal=parts[0], vertical=parts[1])


def perimeter_shape(spec: ShapeSpec, engine: ZetaEngine) -> float:
    """
    Forma cerrada: Per(𝓡_{a,b}) = 2a S(b) + 2b S(a), con S(l) = Σ_{i≤l} ζ(λ, i);
    la k-protuberancia suma 2k ζ(λ, b+1) + 2 S(k) en el lado corto y
    2k ζ(λ, a+1) + 2 S(k) en el largo.
    """
    a, b, k = spec.a, spec.b, spec.k
    value = 2 * a * engine.zeta_sum(b) + 2 * b * engine.zeta_sum(a)
    if k:
        far = b + 1 if spec.side == Side.SHORTER else a + 1
        value += 2 * k * engine.zeta(far) + 2 * engine.zeta_sum(k)
    return value


def semiperimeter_square(l: int, engine: ZetaEngine) -> float:
    """Per(𝓠_l)/2 = 2l² ζ(λ) − 2l Σ_{k=1}^{l-1} (l−k)/k^λ."""
    weighted = math.fsum((l - k) * engine.power(k) for k in range(1, l))
    return 2 * l * l * engine.zeta(1) - 2 * l * weighted


def classical_perimeter(p: Polyomino) -> int:
    """Número de aristas unidad entre una celda de P y una celda fuera de P."""
    cells = p.cells
    return sum(
        (nb not in cells)
        for c in cells
        for nb in ((c.x + 1, c.y), (c.x - 1, c.y), (c.x, c.y + 1), (c.x, c.y - 1))
    )


def classical_perimeter_shape(spec: ShapeSpec) -> int:
    return spec.classical_perimeter
