"""
Paisaje de energía del modelo de Ising bi-axial de largo alcance.

La energía de excitación de una configuración con soporte P es
ΔH = 2 Per_λ(P) − 2h|P|; sobre la foliación 𝒱ₙ el mínimo lo da el catálogo
𝓜ₙ. Aquí se evalúan el paisaje n ↦ ΔH(σ̄ₙ), la función f(l) = ΔH(σ̄_{l²})
en l continuo con sus dos derivadas, la longitud crítica y la comparación con
el modelo de primeros vecinos.
"""
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple, TypeVar

from ..catalog.minimizers import decompose, minimal_specs
from ..core import metrics
from ..core.errors import AmbiguousMax, DivergentParameter, VerificationError
from ..core.metrics import LatencyTimer
from ..core.settings import settings
from ..geometry.lattice import Polyomino
from ..geometry.shapes import ShapeSpec, Side
from ..perimeter.nonlocal_perimeter import perimeter, perimeter_shape
from ..special.zeta import ZetaEngine, get_engine, hurwitz_zeta_real, zeta_difference

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")

_PATH_AGREEMENT = 1e-8
_BISECTION_TOL = 1e-10


@dataclass(frozen=True)
class ModelParams:
    lam: float
    h: float
    L: Optional[int] = None

    def __post_init__(self):
        if not self.lam > 1.0:
            raise DivergentParameter(f"λ debe ser > 1 (λ={self.lam})")
        if not self.h > 0:
            raise ValueError(f"el campo h debe ser positivo (h={self.h})")
        if self.L is not None and self.L < 4:
            raise ValueError(f"el lado del toro debe ser ≥ 4 (L={self.L})")

    @property
    def engine(self) -> ZetaEngine:
        return get_engine(self.lam)


@dataclass(frozen=True)
class LandscapePoint:
    n: int
    minimizing_specs: Tuple[ShapeSpec, ...]
    delta_H: float

    @property
    def shape(self) -> str:
        return "|".join(s.label for s in self.minimizing_specs)

    def to_dict(self) -> Dict:
        return {"n": self.n, "shape": self.shape, "delta_H": self.delta_H}


@dataclass
class Landscape:
    params: ModelParams
    points: List[LandscapePoint]
    n_c: int
    ties: List[int] = field(default_factory=list)
    critical_length: int = 0

    def to_dict(self) -> Dict:
        return {
            "lambda": self.params.lam,
            "h": self.params.h,
            "n_c": self.n_c,
            "ties": self.ties,
            "critical_length": self.critical_length,
            "points": [p.to_dict() for p in self.points],
        }


def _sweep(fn: Callable[[T], R], items: Sequence[T]) -> List[R]:
    """Evaluación paralela con el orden de entrada."""
    if settings.WORKERS <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=settings.WORKERS) as pool:
        return list(pool.map(fn, items))


def hamiltonian_excitation(p: Polyomino, params: ModelParams) -> float:
    """ΔH = 2 Per_λ(P) − 2h|P| para cualquier soporte finito."""
    return 2 * perimeter(p, params.engine).total - 2 * params.h * p.area


def delta_H(n: int, params: ModelParams) -> LandscapePoint:
    """Mínimo de ΔH sobre 𝒱ₙ, con las formas de 𝓜ₙ que lo alcanzan."""
    if n < 1:
        raise ValueError(f"n debe ser ≥ 1 (n={n})")
    engine = params.engine
    values = [(perimeter_shape(spec, engine), spec) for spec in minimal_specs(n)]
    best = min(v for v, _ in values)
    specs = tuple(s for v, s in values if v <= best + settings.COMPARISON_MARGIN)
    return LandscapePoint(n=n, minimizing_specs=specs, delta_H=2 * best - 2 * params.h * n)


def _critical_body_side(point: LandscapePoint) -> int:
    # entre formas empatadas, el cuerpo más cuadrado
    spec = min(point.minimizing_specs, key=lambda s: (s.b - s.a, s.b))
    return spec.b


def landscape(params: ModelParams, n_max: int) -> Landscape:
    """Barrido n = 1..n_max; n_c es el argmax de ΔH (los empates se informan)."""
    if n_max < 4:
        raise ValueError(f"n_max debe ser ≥ 4 (n_max={n_max})")
    if params.lam <= settings.LAMBDA_THEOREM_MIN:
        logger.warning(f"[Landscape] λ={params.lam} ≤ {settings.LAMBDA_THEOREM_MIN}: minimizadores no garantizados")
    timer = LatencyTimer()
    points = _sweep(lambda n: delta_H(n, params), list(range(1, n_max + 1)))
    top = max(p.delta_H for p in points)
    ties = [p.n for p in points if p.delta_H >= top - settings.COMPARISON_MARGIN]
    n_c = ties[0]
    if len(ties) > 1:
        logger.warning(f"[Landscape] máximo compartido por n={ties}")
    metrics.record_compute("landscape", count=n_max, ms=timer.elapsed_ms())
    return Landscape(
        params=params,
        points=points,
        n_c=n_c,
        ties=ties if len(ties) > 1 else [],
        critical_length=_critical_body_side(points[n_c - 1]),
    )


def short_range_delta_H(n: int, h: float) -> float:
    """Análogo de primeros vecinos: 2·per clásico mínimo − 2hn."""
    if n < 1:
        raise ValueError(f"n debe ser ≥ 1 (n={n})")
    return 2 * decompose(n).canonical_spec.classical_perimeter - 2 * h * n


def short_range_critical_area(h: float, n_max: int) -> int:
    values = [short_range_delta_H(n, h) for n in range(1, n_max + 1)]
    return int(max(range(n_max), key=lambda i: (values[i], -i))) + 1


def anisotropy_gap(l: int, k: int, params: ModelParams) -> float:
    """
    ΔH con la k-protuberancia en el lado largo de 𝓡_{l,l+1} menos ΔH con ella
    en el lado corto; vale 4k/(l+1)^λ.
    """
    engine = params.engine
    longer = perimeter_shape(ShapeSpec.quasi_square(l, k, Side.LONGER), engine)
    shorter = perimeter_shape(ShapeSpec.quasi_square(l, k, Side.SHORTER), engine)
    return 2 * (longer - shorter)


def _zeta_at(engine: ZetaEngine, shift: float, l: float) -> float:
    return hurwitz_zeta_real(engine.companion(shift) if shift else engine, l)


def f_square(l: int, params: ModelParams) -> float:
    """f(l) = ΔH(σ̄_{l²}) = 8l Σ_{i≤l} ζ(λ,i) − 2hl² (suma de Hurwitz)."""
    return 8 * l * params.engine.zeta_sum(l) - 2 * params.h * l * l


def f_continuous(l: float, params: ModelParams) -> float:
    """f(l) = −2hl² + 8l²ζ(λ,l) + 8l(ζ(λ−1) − ζ(λ−1,l)) en l real ≥ 1."""
    engine = params.engine
    return (
        -2 * params.h * l * l
        + 8 * l * l * _zeta_at(engine, 0.0, l)
        + 8 * l * zeta_difference(params.lam - 1.0, l, engine.tolerance)
    )


def df_dl(params: ModelParams, l: float) -> float:
    """Derivada primera de f en l continuo."""
    lam, engine = params.lam, params.engine
    return (
        -4 * params.h * l
        - 8 * lam * l * l * _zeta_at(engine, 1.0, l)
        + 8 * (lam + 1) * l * _zeta_at(engine, 0.0, l)
        + 8 * zeta_difference(lam - 1.0, l, engine.tolerance)
    )


def d2f_dl2(params: ModelParams, l: float) -> float:
    """
    Derivada segunda de f:
    −4h − 8λ(λ+3) l ζ(λ+1,l) + 8λ(λ+1) l² ζ(λ+2,l) + 16λ ζ(λ,l).
    """
    if l < 1:
        raise ValueError(f"l debe ser ≥ 1 (l={l})")
    lam, engine = params.lam, params.engine
    return (
        -4 * params.h
        - 8 * lam * (lam + 3) * l * _zeta_at(engine, 1.0, l)
        + 8 * lam * (lam + 1) * l * l * _zeta_at(engine, 2.0, l)
        + 16 * lam * _zeta_at(engine, 0.0, l)
    )


def stationary_point(params: ModelParams, l_max: int) -> Optional[float]:
    """Primer cero de df/dl en [1, l_max] (de + a −), refinado por bisección."""
    previous = df_dl(params, 1.0)
    if previous < 0:
        return None
    for l in range(2, l_max + 1):
        current = df_dl(params, float(l))
        if current < 0:
            lo, hi = float(l - 1), float(l)
            while hi - lo > _BISECTION_TOL:
                mid = 0.5 * (lo + hi)
                if df_dl(params, mid) >= 0:
                    lo = mid
                else:
                    hi = mid
            return 0.5 * (lo + hi)
    return None


@dataclass
class CriticalLength:
    params: ModelParams
    l_c: Optional[int]
    argmax: int
    stationary_point: Optional[float]
    values: List[float]

    def to_dict(self) -> Dict:
        return {
            "lambda": self.params.lam,
            "h": self.params.h,
            "l_c": self.l_c,
            "argmax": self.argmax,
            "stationary_point": self.stationary_point,
            "values": self.values,
        }


def critical_length_square(params: ModelParams, l_max: int) -> CriticalLength:
    """
    Longitud crítica sobre los cuadrados: l_c = ⌊l*⌋ + 1 con l* el punto
    estacionario de f continua; se informa aparte el argmax entero de f.

    Raises:
        AmbiguousMax: dos enteros empatan en el máximo
        VerificationError: las dos evaluaciones de f discrepan
    """
    if l_max < 2:
        raise ValueError(f"l_max debe ser ≥ 2 (l_max={l_max})")
    values = [f_square(l, params) for l in range(1, l_max + 1)]
    for l, value in enumerate(values, start=1):
        other = f_continuous(float(l), params)
        if abs(other - value) > _PATH_AGREEMENT * max(1.0, abs(value)):
            raise VerificationError(f"f({l}) discrepa entre evaluaciones: {value:.12g} vs {other:.12g}")

    top = max(values)
    ties = [l for l, v in enumerate(values, start=1) if v >= top - settings.COMPARISON_MARGIN]
    if len(ties) > 1:
        raise AmbiguousMax(f"f alcanza el máximo en varios l: {ties}", ties=ties)
    l_star = stationary_point(params, l_max)
    if l_star is None:
        logger.warning(f"[Landscape] df/dl no cambia de signo en [1, {l_max}] (λ={params.lam}, h={params.h})")
    return CriticalLength(
        params=params,
        l_c=math.floor(l_star) + 1 if l_star is not None else None,
        argmax=ties[0],
        stationary_point=l_star,
        values=values,
    )


def critical_length(params: ModelParams, n_max: int) -> int:
    """Lado largo del cuerpo del minimizador de mayor energía del paisaje."""
    return landscape(params, n_max).critical_length


def critical_surface(h: float, lambdas: Sequence[float], l_max: int) -> List[Dict]:
    """l_c y punto estacionario sobre una rejilla de λ."""

    def row(lam: float) -> Dict:
        params = ModelParams(lam=lam, h=h)
        try:
            result = critical_length_square(params, l_max)
            return {"lambda": lam, "l_c": result.l_c, "argmax": result.argmax,
                    "stationary_point": result.stationary_point}
        except AmbiguousMax as e:
            return {"lambda": lam, "l_c": None, "argmax": e.ties[0], "stationary_point": None}

    return _sweep(row, list(lambdas))


def d2_table(h: float, lambdas: Sequence[float], l_max: int) -> List[Dict]:
    rows: List[Dict] = []
    for lam in lambdas:
        params = ModelParams(lam=lam, h=h)
        values = _sweep(lambda l: d2f_dl2(params, float(l)), list(range(1, l_max + 1)))
        rows.extend({"lambda": lam, "l": l, "d2f": v} for l, v in enumerate(values, start=1))
    return rows
