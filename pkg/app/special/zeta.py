"""
Función zeta de Hurwitz ζ(s, q) = Σ_{r≥0} (r+q)^{-s} con error de truncamiento certificado.

La evaluación usa Euler–Maclaurin: suma parcial hasta N, término integral
(q+N)^{1-s}/(s-1), medio término (q+N)^{-s}/2 y M correcciones de Bernoulli.
Para s real el resto está acotado por el primer término omitido, así que N se
elige hasta que ese término quede por debajo de la tolerancia.
"""
import logging
import math
from threading import Lock
from typing import Dict, Optional, Tuple

import numpy as np

from ..core.cache import ValueCache
from ..core.errors import DivergentParameter
from ..core.settings import settings

logger = logging.getLogger(__name__)

# B_2, B_4, ..., B_20
_BERNOULLI = (
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
)
_EM_TERMS = 8
_MIN_CUTOFF = 10
_MAX_CUTOFF = 10_000_000
_EULER_GAMMA = 0.57721566490153286061


def _em_terms(s: float, x: float, count: int) -> Tuple[float, float]:
    """Suma de `count` correcciones de Bernoulli en x y valor absoluto de la siguiente."""
    rising = s  # s(s+1)...(s+2j-2)
    fact = 2.0  # (2j)!
    power = x ** (-s - 1.0)
    terms = []
    for j in range(1, count + 1):
        terms.append(_BERNOULLI[j - 1] / fact * rising * power)
        rising *= (s + 2 * j - 1) * (s + 2 * j)
        fact *= (2 * j + 1) * (2 * j + 2)
        power /= x * x
    omitted = _BERNOULLI[count] / fact * rising * power
    return math.fsum(terms), abs(omitted)


def euler_maclaurin(s: float, q: float, tolerance: float) -> Tuple[float, int, float]:
    """
    Evalúa ζ(s, q) para s real distinto de 1 y q > 0.

    Returns:
        (valor, cutoff N, cota del resto)
    """
    if s == 1.0:
        raise DivergentParameter("ζ(s, q) tiene un polo en s = 1")
    if q <= 0:
        raise ValueError(f"desplazamiento q debe ser positivo (q={q})")
    n = max(0, math.ceil(_MIN_CUTOFF - q))
    while True:
        x = q + n
        corr, bound = _em_terms(s, x, _EM_TERMS)
        if bound <= 0.5 * tolerance:
            break
        if n > _MAX_CUTOFF:
            logger.warning(
                f"[Zeta] cota {bound:.3e} sin alcanzar la tolerancia {tolerance:.1e} con N={n}",
                extra={"context": {"s": s, "q": q, "cutoff": n, "bound": bound}},
            )
            break
        n = max(2 * n, 16)
    head = math.fsum((q + k) ** (-s) for k in range(n)) if n else 0.0
    tail = x ** (1.0 - s) / (s - 1.0) + 0.5 * x ** (-s)
    return math.fsum((head, tail, corr)), n, bound


def hurwitz_zeta_continued(s: float, q: float, tolerance: Optional[float] = None) -> float:
    """ζ(s, q) para cualquier s real ≠ 1 (continuación analítica vía Euler–Maclaurin)."""
    value, _, _ = euler_maclaurin(float(s), float(q), tolerance or settings.ZETA_TOLERANCE)
    return value


def _digamma(x: float) -> float:
    n = max(0, math.ceil(_MIN_CUTOFF - x))
    y = x + n
    series = math.fsum(b / (2 * j) * y ** (-2 * j) for j, b in enumerate(_BERNOULLI[:_EM_TERMS], start=1))
    head = math.fsum(1.0 / (x + k) for k in range(n)) if n else 0.0
    return math.log(y) - 0.5 / y - series - head


def zeta_difference(s: float, l: float, tolerance: Optional[float] = None) -> float:
    """
    ζ(s) − ζ(s, l) para l ≥ 1 real; en s = 1 se usa el límite ψ(l) + γ.

    Para l entero coincide con Σ_{k=1}^{l-1} k^{-s}.
    """
    if abs(s - 1.0) < 1e-12:
        return _digamma(float(l)) + _EULER_GAMMA
    tol = tolerance or settings.ZETA_TOLERANCE
    return hurwitz_zeta_continued(s, 1.0, tol) - hurwitz_zeta_continued(s, float(l), tol)


class ZetaEngine:
    """Evaluador de ζ(λ, i) para un λ fijo, con cache por desplazamiento entero."""

    def __init__(self, lam: float, tolerance: Optional[float] = None):
        lam = float(lam)
        if not lam > 1.0:
            raise DivergentParameter(f"λ debe ser > 1 (λ={lam})")
        self.lam = lam
        self.tolerance = float(tolerance or settings.ZETA_TOLERANCE)
        self._values = ValueCache(name=f"zeta({lam:g})")
        self._cutoffs: Dict[int, int] = {}
        self._prefix: Dict[float, np.ndarray] = {}
        self._prefix_lock = Lock()
        self._cutoffs_lock = Lock()

    def __repr__(self) -> str:
        return f"ZetaEngine(lam={self.lam!r}, tolerance={self.tolerance!r})"

    def _evaluate(self, i: int) -> float:
        value, cutoff, _ = euler_maclaurin(self.lam, float(i), self.tolerance)
        with self._cutoffs_lock:
            self._cutoffs[i] = cutoff
        return value

    def zeta(self, i: int = 1) -> float:
        """ζ(λ, i) para i ≥ 1 entero (cacheado)."""
        if i < 1:
            raise ValueError(f"desplazamiento i debe ser ≥ 1 (i={i})")
        return self._values.get_or_compute(int(i), lambda: self._evaluate(int(i)))

    def zeta_real(self, q: float) -> float:
        """ζ(λ, q) para q > 0 real, sin cache."""
        value, _, _ = euler_maclaurin(self.lam, float(q), self.tolerance)
        return value

    def cutoff(self, i: int) -> int:
        """Cutoff N usado para el valor cacheado de ζ(λ, i)."""
        self.zeta(i)
        return self._cutoffs.get(int(i), 0)

    def power(self, r: int) -> float:
        """r^{-λ}."""
        return float(r) ** (-self.lam)

    def prefix(self, m: int, shift: float = 0.0) -> float:
        """Σ_{k=1}^{m} k^{-(λ-shift)}; m ≤ 0 devuelve 0."""
        if m <= 0:
            return 0.0
        return float(self.prefix_array(m, shift)[m])

    def prefix_array(self, m: int, shift: float = 0.0) -> np.ndarray:
        """
        Vector P con P[k] = Σ_{r=1}^{k} r^{-(λ-shift)} y P[0] = 0, de longitud ≥ m+1.

        Sólo se guardan tablas de hasta PREFIX_TABLE_MAX términos; las mayores
        se construyen para la llamada y se descartan.
        """
        table = self._prefix.get(shift)
        if table is not None and len(table) > m:
            return table
        cap = settings.PREFIX_TABLE_MAX
        if m > cap:
            logger.debug(f"[Zeta] tabla temporal de {m} términos (λ={self.lam:g})")
            k = np.arange(1, m + 1, dtype=np.float64)
            return np.concatenate(([0.0], np.cumsum(k ** (-(self.lam - shift)))))
        with self._prefix_lock:
            table = self._prefix.get(shift)
            if table is None or len(table) <= m:
                size = min(cap, max(m, 2 * (len(table) - 1) if table is not None else 64))
                k = np.arange(1, size + 1, dtype=np.float64)
                table = np.concatenate(([0.0], np.cumsum(k ** (-(self.lam - shift)))))
                self._prefix[shift] = table
            return table

    def zeta_sum(self, l: int) -> float:
        """S(l) = Σ_{i=1}^{l} ζ(λ, i) = l ζ(λ, l) + Σ_{k<l} k^{1-λ}."""
        if l <= 0:
            return 0.0
        return l * self.zeta(l) + self.prefix(l - 1, shift=1.0)

    def companion(self, delta: float) -> "ZetaEngine":
        """Motor en λ + delta con la misma tolerancia."""
        return get_engine(self.lam + delta, self.tolerance)

    def stats(self) -> Dict[str, float]:
        with self._prefix_lock:
            terms = max((len(t) - 1 for t in self._prefix.values()), default=0)
        return {"lambda": self.lam, "tolerance": self.tolerance, "prefix_terms": terms, **self._values.stats()}


_engines: Dict[Tuple[float, float], ZetaEngine] = {}
_engines_lock = Lock()


def get_engine(lam: float, tolerance: Optional[float] = None) -> ZetaEngine:
    """Retorna el motor compartido para (λ, tolerancia)."""
    key = (float(lam), float(tolerance or settings.ZETA_TOLERANCE))
    with _engines_lock:
        engine = _engines.get(key)
        if engine is None:
            engine = ZetaEngine(*key)
            _engines[key] = engine
            logger.debug(f"[Zeta] nuevo motor λ={key[0]:g} tol={key[1]:g}")
        return engine


def engines_stats() -> list:
    with _engines_lock:
        return [e.stats() for e in _engines.values()]


def hurwitz_zeta(engine: ZetaEngine, i: int) -> float:
    """ζ(λ, i) dentro de la tolerancia del motor."""
    return engine.zeta(i)


def hurwitz_zeta_real(engine: ZetaEngine, q: float) -> float:
    """ζ(λ, q) para q ≥ 1 real; en enteros usa el valor cacheado."""
    if q < 1:
        raise ValueError(f"desplazamiento q debe ser ≥ 1 (q={q})")
    return engine.zeta(int(q)) if float(q).is_integer() else engine.zeta_real(q)


def power_sum(engine: ZetaEngine, m: int) -> np.ndarray:
    """Sumas acumuladas Σ_{k=1}^{j} k^{−λ} para j = 0..m."""
    return engine.prefix_array(m)[: m + 1]


def hurwitz_zeta_dl(engine: ZetaEngine, l: float) -> float:
    """∂/∂l ζ(λ, l) = −λ ζ(λ+1, l)."""
    return -engine.lam * hurwitz_zeta_real(engine.companion(1.0), l)
