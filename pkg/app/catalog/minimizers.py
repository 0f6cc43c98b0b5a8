"""
Catálogo de minimizadores 𝓜ₙ, su extensión 𝓜ₙᵉˣᵗ, argmin en λ y cruces de forma.

𝓜ₙ contiene la forma canónica (𝓠_l^{k₁} o 𝓡_{l,l+1}^{k₂}) y todo 𝓡_{a,b}^k de
la misma área y el mismo perímetro clásico; las formas se guardan en su forma
normal de congruencia para no contar dos veces la misma figura.
"""
import logging
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Set, Tuple

from ..core.errors import NoTwoShapes
from ..core.settings import settings
from ..geometry.lattice import Cell, orbit_key
from ..geometry.shapes import ShapeSpec, Side, realize
from ..perimeter.nonlocal_perimeter import perimeter_shape
from ..special.zeta import ZetaEngine

logger = logging.getLogger(__name__)

RectForm = Tuple[int, int, int, Side]


@dataclass(frozen=True)
class Decomposition:
    n: int
    square_form: Optional[Tuple[int, int]]
    quasi_form: Optional[Tuple[int, int]]

    @property
    def l(self) -> int:
        return (self.square_form or self.quasi_form)[0]

    @cached_property
    def rect_forms(self) -> Tuple[RectForm, ...]:
        """Todos los (a, b, k, lado) con a ≤ b, ab + k = n y k en su rango válido."""
        forms: List[RectForm] = []
        for a in range(1, math.isqrt(self.n) + 1):
            for b in range(a, self.n // a + 1):
                k = self.n - a * b
                if k == 0:
                    forms.append((a, b, 0, Side.SHORTER))
                    continue
                if k <= a - 1:
                    forms.append((a, b, k, Side.SHORTER))
                if a != b and k <= b - 1:
                    forms.append((a, b, k, Side.LONGER))
        return tuple(forms)

    @property
    def canonical_spec(self) -> ShapeSpec:
        if self.square_form is not None:
            l, k1 = self.square_form
            return ShapeSpec.square(l, k1)
        l, k2 = self.quasi_form
        # k₂ = l solo cabe en el lado largo
        return ShapeSpec.quasi_square(l, k2, Side.SHORTER if k2 <= l - 1 else Side.LONGER)


def decompose(n: int) -> Decomposition:
    """n = l² + k₁ (0 ≤ k₁ ≤ l−1) o n = l(l+1) + k₂ (0 ≤ k₂ ≤ l), exactamente una."""
    if n < 1:
        raise ValueError(f"el área debe ser ≥ 1 (n={n})")
    l = math.isqrt(n)
    k1 = n - l * l
    if k1 <= l - 1:
        return Decomposition(n, (l, k1), None)
    return Decomposition(n, None, (l, n - l * (l + 1)))


@dataclass(frozen=True)
class CatalogEntry:
    spec: ShapeSpec
    classical_perimeter: int
    nonlocal_perimeter: Optional[float] = None

    def to_dict(self) -> Dict:
        return {
            "shape": self.spec.label,
            "a": self.spec.a,
            "b": self.spec.b,
            "k": self.spec.k,
            "side": self.spec.side.value,
            "classical_perimeter": self.classical_perimeter,
            "nonlocal_perimeter": self.nonlocal_perimeter,
        }


@dataclass(frozen=True)
class Catalog:
    n: int
    minimal: Tuple[CatalogEntry, ...]
    extended: Tuple[CatalogEntry, ...] = field(default=())

    @property
    def specs(self) -> List[ShapeSpec]:
        return [e.spec for e in self.minimal]


def _dedupe(specs: Sequence[ShapeSpec]) -> List[ShapeSpec]:
    seen: Set[ShapeSpec] = set()
    out: List[ShapeSpec] = []
    for spec in specs:
        normal = spec.normal_form()
        if normal not in seen:
            seen.add(normal)
            out.append(normal)
    return out


def minimal_specs(n: int) -> List[ShapeSpec]:
    """
    𝓜ₙ como lista de ShapeSpec, forma canónica primero.

    Se recorre a + b fijado por el perímetro clásico de referencia
    (a + b = p/2 sin protuberancia, p/2 − 1 con ella).
    """
    canonical = decompose(n).canonical_spec
    half = canonical.classical_perimeter // 2
    found: List[ShapeSpec] = [canonical]
    for a in range(1, half // 2 + 1):
        b = half - a
        if a * b == n:
            found.append(ShapeSpec.rect(a, b))
    s = half - 1
    for a in range(1, s // 2 + 1):
        b = s - a
        k = n - a * b
        if k < 1:
            continue
        if k <= a - 1:
            found.append(ShapeSpec.rect(a, b, k, Side.SHORTER))
        if a != b and k <= b - 1:
            found.append(ShapeSpec.rect(a, b, k, Side.LONGER))
    return _dedupe(found)


def extended_catalog(n: int) -> List[ShapeSpec]:
    """𝓜ₙᵉˣᵗ: 𝓜ₙ más todos los 𝓡_{a,b}^k de área n."""
    forms = [ShapeSpec(a, b, k, side) for a, b, k, side in decompose(n).rect_forms]
    return _dedupe(minimal_specs(n) + forms)


def _entries(specs: Sequence[ShapeSpec], engine: Optional[ZetaEngine]) -> Tuple[CatalogEntry, ...]:
    return tuple(
        CatalogEntry(s, s.classical_perimeter, perimeter_shape(s, engine) if engine else None) for s in specs
    )


def catalog(n: int, engine: Optional[ZetaEngine] = None, extended: bool = True) -> Catalog:
    """(𝓜ₙ, 𝓜ₙᵉˣᵗ); con motor, cada entrada lleva su Per_λ."""
    minimal = _entries(minimal_specs(n), engine)
    ext = _entries(extended_catalog(n), engine) if extended else ()
    return Catalog(n=n, minimal=minimal, extended=ext)


def catalog_realizations(n: int, specs: Optional[Sequence[ShapeSpec]] = None) -> Set[Tuple[Cell, ...]]:
    """Claves de órbita diédrica de todas las realizaciones (todos los desplazamientos)."""
    keys: Set[Tuple[Cell, ...]] = set()
    for spec in specs if specs is not None else minimal_specs(n):
        for offset in spec.offsets():
            keys.add(orbit_key(realize(spec, offset)))
    return keys


def argmin_shape(n: int, engine: ZetaEngine, margin: Optional[float] = None) -> List[CatalogEntry]:
    """Entradas de 𝓜ₙ con Per_λ mínimo; los empates dentro del margen se devuelven juntos."""
    if engine.lam <= settings.LAMBDA_THEOREM_MIN:
        logger.warning(f"[Catalog] λ={engine.lam} ≤ {settings.LAMBDA_THEOREM_MIN}: fuera del rango del teorema")
    margin = settings.COMPARISON_MARGIN if margin is None else margin
    entries = _entries(minimal_specs(n), engine)
    best = min(e.nonlocal_perimeter for e in entries)
    return [e for e in entries if e.nonlocal_perimeter <= best + margin]


def crossover_between(
    first: ShapeSpec,
    second: ShapeSpec,
    lo: float,
    hi: float,
    tol: Optional[float] = None,
    tolerance: Optional[float] = None,
) -> Optional[float]:
    """
    Raíz por bisección de Per_λ(first) − Per_λ(second) en [lo, hi].

    Returns:
        λ* con precisión `tol`, o None si no hay cambio de signo en los extremos
    """
    tol = tol or settings.CROSSOVER_TOLERANCE

    def gap(lam: float) -> float:
        engine = ZetaEngine(lam, tolerance)
        return perimeter_shape(first, engine) - perimeter_shape(second, engine)

    g_lo, g_hi = gap(lo), gap(hi)
    if g_lo == 0.0:
        return lo
    if g_hi == 0.0:
        return hi
    if (g_lo > 0) == (g_hi > 0):
        return None
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        g_mid = gap(mid)
        if g_mid == 0.0:
            return mid
        if (g_mid > 0) == (g_lo > 0):
            lo, g_lo = mid, g_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


@dataclass(frozen=True)
class Crossover:
    n: int
    lambda_star: float
    before: ShapeSpec
    after: ShapeSpec

    def to_dict(self) -> Dict:
        return {
            "n": self.n,
            "lambda_star": self.lambda_star,
            "before": self.before.label,
            "after": self.after.label,
        }


def _decisive_winner(specs: Sequence[ShapeSpec], lam: float, margin: float, tolerance: Optional[float]):
    engine = ZetaEngine(lam, tolerance)
    values = [perimeter_shape(s, engine) for s in specs]
    order = sorted(range(len(specs)), key=values.__getitem__)
    if values[order[1]] - values[order[0]] <= margin:
        return None
    return specs[order[0]]


def crossover_points(
    n: int,
    lo: Optional[float] = None,
    hi: Optional[float] = None,
    tol: Optional[float] = None,
    grid_points: Optional[int] = None,
    tolerance: Optional[float] = None,
) -> List[Crossover]:
    """
    Todos los cambios de minimizador de 𝓜ₙ en (lo, hi].

    Se barre una rejilla uniforme; solo cuentan los ganadores estrictos (por
    encima del margen de comparación) y cada cambio se refina por bisección.
    """
    lo = settings.LAMBDA_THEOREM_MIN if lo is None else lo
    hi = settings.CROSSOVER_LAMBDA_MAX if hi is None else hi
    grid_points = grid_points or settings.CROSSOVER_GRID_POINTS
    specs = minimal_specs(n)
    if len(specs) < 2:
        raise NoTwoShapes(f"𝓜_{n} tiene una sola forma ({specs[0].label})")
    margin = settings.COMPARISON_MARGIN
    out: List[Crossover] = []
    last: Optional[Tuple[float, ShapeSpec]] = None
    for j in range(1, grid_points + 1):
        lam = lo + (hi - lo) * j / grid_points
        winner = _decisive_winner(specs, lam, margin, tolerance)
        if winner is None:
            continue
        if last is not None and winner != last[1]:
            root = crossover_between(last[1], winner, last[0], lam, tol, tolerance)
            if root is not None:
                out.append(Crossover(n, root, last[1], winner))
        last = (lam, winner)
    logger.debug(f"[Catalog] n={n}: {len(out)} cruce(s) en ({lo}, {hi}]")
    return out


def crossover_lambda(n: int, **kwargs) -> Optional[float]:
    """Primer cruce de forma de 𝓜ₙ en (1.8, 20], o None."""
    points = crossover_points(n, **kwargs)
    return points[0].lambda_star if points else None


def lambda_c(lo: float = 1.05, hi: float = 3.0, tol: Optional[float] = None) -> Optional[float]:
    """Cruce entre 𝓠₂ y 𝓡_{1,4}: raíz de 1 − 2^{1−λ} − 3^{−λ}."""
    return crossover_between(ShapeSpec.square(2), ShapeSpec.rect(1, 4), lo, hi, tol)
