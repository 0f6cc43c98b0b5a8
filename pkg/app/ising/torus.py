"""
Perímetro en el toro de lado L y su diferencia con la red infinita.
"""
import logging
from dataclasses import dataclass
from typing import Dict

import numpy as np

from ..core.errors import PolyominoTooLargeForTorus
from ..geometry.lattice import Polyomino
from ..perimeter.nonlocal_perimeter import perimeter
from ..special.zeta import ZetaEngine
from .landscape import ModelParams

logger = logging.getLogger(__name__)


def _check_fits(p: Polyomino, L: int):
    if L < 4:
        raise ValueError(f"el lado del toro debe ser ≥ 4 (L={L})")
    if 2 * p.width > L or 2 * p.height > L:
        raise PolyominoTooLargeForTorus(f"caja {p.width}×{p.height} no cabe en L/2 = {L / 2:g}")


def _wrapped_line_sum(positions, L: int, lam: float) -> float:
    occupied = np.zeros(L, dtype=bool)
    occupied[np.asarray(positions) % L] = True
    empty = np.flatnonzero(~occupied)
    total = 0.0
    for x in positions:
        d = np.abs(empty - x % L)
        d = np.minimum(d, L - d)
        total += float(np.sum(d.astype(np.float64) ** (-lam)))
    return total


def torus_perimeter(p: Polyomino, L: int, engine: ZetaEngine) -> float:
    """Per_λ con distancias axiales envueltas: cada par celda/vacío de una fila o columna del toro."""
    _check_fits(p, L)
    rows = sum(_wrapped_line_sum(xs, L, engine.lam) for xs in p.rows().values())
    columns = sum(_wrapped_line_sum(ys, L, engine.lam) for ys in p.columns().values())
    return rows + columns


@dataclass(frozen=True)
class TorusCorrection:
    torus: float
    infinite: float
    bound: float
    constant: float

    @property
    def difference(self) -> float:
        return self.infinite - self.torus

    def to_dict(self) -> Dict[str, float]:
        return {
            "torus": self.torus,
            "infinite": self.infinite,
            "difference": self.difference,
            "bound": self.bound,
            "constant": self.constant,
        }


def torus_correction_bound(p: Polyomino, params: ModelParams) -> TorusCorrection:
    """
    Compara el perímetro en el toro con el de la red infinita. Cada semirrecta
    de cada celda aporta a lo sumo Σ_{r≥L/2} r^{−λ} ≤ (L/2)^{−λ} + (L/2)^{1−λ}/(λ−1),
    luego |Δ| ≤ 4·|P|·((L/2)^{−λ} + (L/2)^{1−λ}/(λ−1)).
    """
    if params.L is None:
        raise ValueError("se necesita el lado L del toro")
    L, lam = params.L, params.lam
    engine = params.engine
    torus = torus_perimeter(p, L, engine)
    infinite = perimeter(p, engine).total
    half = L / 2
    constant = 4.0 * (1.0 + (lam - 1.0) / half)
    bound = constant * p.area * half ** (1.0 - lam) / (lam - 1.0)
    if abs(infinite - torus) > bound:
        logger.warning(f"[Torus] diferencia {infinite - torus:.3e} supera la cota {bound:.3e} (L={L})")
    return TorusCorrection(torus=torus, infinite=infinite, bound=bound, constant=constant)
