"""
Diagnósticos de positividad de las diferencias de perímetro rectángulo − cuadrado.

Notación: p_r = r^{-λ}, W(m) = Σ_{k<m} (m−k) p_k. Todas las funciones reciben
un ZetaEngine y devuelven el valor numérico; `positivity_diagnostics` agrupa
las que aplican a unos parámetros (a, b, l, k₁, k₂) y marca cada valor cuya
positividad se afirma y no se cumple.
"""
import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from ..core.errors import HypothesisViolated
from ..core.settings import settings
from ..special.identities import power_range, weighted_power_sum
from ..special.zeta import ZetaEngine

logger = logging.getLogger(__name__)


def _p1_range(engine: ZetaEngine, lo: int, hi: int) -> float:
    """Σ_{k=lo}^{hi} k^{1-λ}."""
    lo = max(lo, 1)
    if hi < lo:
        return 0.0
    return engine.prefix(hi, shift=1.0) - engine.prefix(lo - 1, shift=1.0)


def _linear_range(engine: ZetaEngine, lo: int, hi: int, c: float, slope: float) -> float:
    """Σ_{k=lo}^{hi} (c − slope·k) p_k."""
    return c * power_range(engine, lo, hi) - slope * _p1_range(engine, lo, hi)


def _w(engine: ZetaEngine, m: int) -> float:
    return weighted_power_sum(engine, m - 1, m)


# cuadrado 𝓠_l frente a 𝓡_{a,b} con ab = l²

def f1(a: int, l: int, engine: ZetaEngine) -> float:
    """F₁(a,l) = (a + l²/a − 2l) Σ_{k<a} k^{1-λ} − 2(l−a) Σ_{k=a}^{l-1} k^{1-λ} + (l²−a²)/a^λ."""
    coeff = a + l * l / a - 2 * l
    return math.fsum((
        coeff * _p1_range(engine, 1, a - 1),
        -2 * (l - a) * _p1_range(engine, a, l - 1),
        (l * l - a * a) * engine.power(a),
    ))


def f2(a: int, l: int, b: int, engine: ZetaEngine) -> float:
    """F₂(a,l,b) = Σ_{k=a+1}^{l-1} (l²−ak) p_k − Σ_{k=l}^{b-1} (l²−ak) p_k."""
    return _linear_range(engine, a + 1, l - 1, l * l, a) - _linear_range(engine, l, b - 1, l * l, a)


def delta_square_rectangle(a: int, l: int, engine: ZetaEngine) -> float:
    """(Per(𝓡_{a,b}) − Per(𝓠_l))/2 = F₁ + F₂ con b = l²/a."""
    return f1(a, l, engine) + f2(a, l, l * l // a, engine)


# cuasicuadrado 𝓡_{l,l+1} frente a 𝓡_{a,b} con ab = l(l+1)

def f1_quasi(a: int, l: int, engine: ZetaEngine) -> float:
    n = l * (l + 1)
    coeff = a + n / a - 2 * l - 1
    return math.fsum((
        coeff * _p1_range(engine, 1, a - 1),
        -(l - a) * _p1_range(engine, a, l),
        -(l + 1 - a) * _p1_range(engine, a, l - 1),
        (n - a * a) * engine.power(a),
    ))


def f2_quasi(a: int, l: int, b: int, engine: ZetaEngine) -> float:
    n = l * (l + 1)
    return _linear_range(engine, a + 1, l, n, a) - _linear_range(engine, l, b - 1, n, a)


def delta_quasi_rectangle(a: int, l: int, engine: ZetaEngine) -> float:
    """(Per(𝓡_{a,b}) − Per(𝓡_{l,l+1}))/2 con ab = l(l+1)."""
    return f1_quasi(a, l, engine) + f2_quasi(a, l, l * (l + 1) // a, engine)


# cuadrado con protuberancia 𝓠_l^{k₁} frente a 𝓡_{a,b}^{k₂}

def f1_tilde(a: int, l: int, k1: int, engine: ZetaEngine) -> float:
    """F̃₁ = F₁(a,l) − (k₁/a) W(a) + k₁/l^λ + W(k₁)."""
    return math.fsum((
        f1(a, l, engine),
        -k1 / a * _w(engine, a),
        k1 * engine.power(l),
        _w(engine, k1),
    ))


def f2_tilde(a: int, l: int, k1: int, engine: ZetaEngine) -> float:
    """F̃₂ = Σ_{r=a+1}^{l-1} (l²−ar) p_r − Σ_{r=l}^{⌊(l²+k₁)/a − 1⌋} (l²+k₁−ar) p_r."""
    top = (l * l + k1) // a - 1
    return _linear_range(engine, a + 1, l - 1, l * l, a) - _linear_range(engine, l, top, l * l + k1, a)


def protuberance_term(a: int, b: int, k2: int, engine: ZetaEngine) -> float:
    """(k₂/a) W(a) − k₂/b^λ − W(k₂): aporte de la protuberancia del rectángulo."""
    if k2 == 0:
        return 0.0
    return k2 / a * _w(engine, a) - k2 * engine.power(b) - _w(engine, k2)


def delta_protuberance(a: int, b: int, l: int, k1: int, k2: int, engine: ZetaEngine) -> float:
    """
    (Per(𝓡_{a,b}^{k₂}) − Per(𝓠_l^{k₁}))/2 = F̃₁ + F̃₂ + término de protuberancia,
    con ab + k₂ = l² + k₁ y k₂ < a en el lado corto.
    """
    return f1_tilde(a, l, k1, engine) + f2_tilde(a, l, k1, engine) + protuberance_term(a, b, k2, engine)


def delta_lac(l: int, alpha: int, C: int, engine: ZetaEngine) -> float:
    """
    Δ(l, α, C) = (Per(𝓡_{l−α, l+α+1+C}) − Per(𝓠_l^{m}))/2 con m = −α² + (1+C)(l−α).
    """
    if l - alpha < 1:
        raise ValueError(f"se requiere l − α ≥ 1 (l={l}, α={alpha})")
    m = -alpha * alpha + (1 + C) * (l - alpha)
    top = l + alpha + C
    return math.fsum((
        m * engine.prefix(l),
        -(l - alpha) * weighted_power_sum(engine, top, top + 1),
        -(top + 1) * weighted_power_sum(engine, l - alpha - 1, l - alpha),
        2 * l * weighted_power_sum(engine, l - 1, l),
        weighted_power_sum(engine, m - 1, m),
    ))


def delta_tilde(l: int, alpha: int, C: int, engine: ZetaEngine) -> float:
    """Δ̃(l, α, C) = Δ(l, α, C−1) − (l−α) Σ_{r=l+1}^{l+α+C} p_r."""
    return delta_lac(l, alpha, C - 1, engine) - (l - alpha) * power_range(engine, l + 1, l + alpha + C)


def lemma_f(x: int, engine: ZetaEngine) -> float:
    """Función auxiliar de la inducción en α; positiva para λ > 1.8 y x ≥ 2."""
    if x < 2:
        raise ValueError(f"f está definida para x ≥ 2 (x={x})")
    x2 = x * x
    return math.fsum((
        x2 * engine.prefix(x2 + x),
        -x2 * weighted_power_sum(engine, (x + 1) ** 2, (x + 1) ** 2 + 1),
        -((x + 1) ** 2) * weighted_power_sum(engine, x2 - 1, x2),
        2 * (x2 + x) * weighted_power_sum(engine, x2 + x - 1, x2 + x),
        -x2 * power_range(engine, x2 + x + 1, x2 + 2 * x + 2),
    ))


def step7_f(x: int, engine: ZetaEngine) -> float:
    """f(x, λ) = Σ_{j=1}^{x} j^{1-λ} − x ζ(λ, x+2); f(1, λ) = 1 − ζ(λ, 3)."""
    if x < 1:
        raise ValueError(f"x debe ser ≥ 1 (x={x})")
    return engine.prefix(x, shift=1.0) - x * engine.zeta(x + 2)


@dataclass
class DiagnosticsReport:
    mode: str
    params: Dict[str, int]
    lam: float
    values: Dict[str, float] = field(default_factory=dict)
    claims: Dict[str, str] = field(default_factory=dict)
    violations: List[str] = field(default_factory=list)
    # alcance de cada diagnóstico sin afirmación o con afirmación condicionada
    scope: Dict[str, str] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def claim(self, name: str, value: float, strict: bool = True):
        """Registra la afirmación `value > 0` (o ≥ 0) y anota la violación si no se cumple."""
        self.values[name] = value
        self.claims[name] = ">0" if strict else ">=0"
        holds = value > 0 if strict else value >= -settings.COMPARISON_MARGIN
        if not holds:
            self.violations.append(name)
            logger.warning(f"[Diagnostics] {name}={value:.6g} no cumple {self.claims[name]} ({self.params}, λ={self.lam})")

    def to_dict(self) -> Dict:
        return {
            "mode": self.mode,
            "params": self.params,
            "lambda": self.lam,
            "values": self.values,
            "claims": self.claims,
            "violations": self.violations,
            "scope": self.scope,
            "ok": self.ok,
        }


def _require(condition: bool, constraint: str):
    if not condition:
        raise HypothesisViolated(constraint)


def positivity_diagnostics(
    a: int,
    b: int,
    l: int,
    k1: int = 0,
    k2: Optional[int] = None,
    *,
    engine: ZetaEngine,
) -> DiagnosticsReport:
    """
    Evalúa los diagnósticos que aplican a (a, b, l, k₁, k₂).

    Modos:
      - square: k₁ = 0, ab = l², a < b → F₁, F₂, Δ
      - quasi: k₁ = 0, ab = l(l+1), a < l → f₁, f₂, Δ
      - square+prot: 1 ≤ k₁ ≤ l−1, ab + k₂ = l² + k₁, a < l, 0 ≤ k₂ ≤ min(k₁, a−1)
        → F̃₁, F̃₂, término de protuberancia, su suma y, si procede, Δ y Δ̃

    Las afirmaciones de positividad solo se registran para λ > LAMBDA_THEOREM_MIN.
    En modo square+prot, F̃₁ > 0 solo se afirma si l ≥ a + √a; F̃₂ cambia de signo
    y se informa sin afirmación. `scope` deja constancia de ambos casos.

    Raises:
        HypothesisViolated: con la restricción que falla
    """
    k2 = k2 or 0
    _require(a >= 1 and b >= 1 and l >= 1, "a, b, l ≥ 1")
    if a > b:
        a, b = b, a
    theorem = engine.lam > settings.LAMBDA_THEOREM_MIN
    params = {"a": a, "b": b, "l": l, "k1": k1, "k2": k2}

    if k1 == 0:
        _require(k2 == 0, "k₂ = 0 cuando k₁ = 0")
        if a * b == l * l:
            _require(a < b, "a < b")
            report = DiagnosticsReport("square", params, engine.lam)
            v1, v2 = f1(a, l, engine), f2(a, l, b, engine)
            report.values.update({"F1": v1, "F2": v2})
            if theorem:
                report.claim("F1", v1)
                if l >= 3:
                    report.claim("F2", v2, strict=False)
                report.claim("delta", v1 + v2)
            else:
                report.values["delta"] = v1 + v2
        elif a * b == l * (l + 1):
            _require(a < l, "a < l")
            report = DiagnosticsReport("quasi", params, engine.lam)
            v1, v2 = f1_quasi(a, l, engine), f2_quasi(a, l, b, engine)
            report.values.update({"f1": v1, "f2": v2, "delta": v1 + v2})
            if theorem:
                if l >= 4:
                    report.claim("f1", v1)
                    report.claim("f2", v2, strict=False)
                report.claim("delta", v1 + v2)
        else:
            raise HypothesisViolated("ab = l² o ab = l(l+1)")
    else:
        _require(1 <= k1 <= l - 1, "1 ≤ k₁ ≤ l−1")
        _require(a < l, "a < l")
        _require(0 <= k2 <= min(k1, a - 1), "0 ≤ k₂ ≤ min(k₁, a−1)")
        _require(a * b + k2 == l * l + k1, "ab + k₂ = l² + k₁")
        report = DiagnosticsReport("square+prot", params, engine.lam)
        t1, t2 = f1_tilde(a, l, k1, engine), f2_tilde(a, l, k1, engine)
        extra = protuberance_term(a, b, k2, engine)
        report.values.update({"F1_tilde": t1, "F2_tilde": t2, "protuberance": extra, "delta": t1 + t2 + extra})
        alpha = l - a
        if k2 == 0 and a + b - 2 * l - 1 >= 0:
            report.values["delta_lac"] = delta_lac(l, alpha, a + b - 2 * l - 1, engine)
        C = a + b - 2 * l
        if C >= 2:
            report.values["delta_tilde"] = delta_tilde(l, alpha, C, engine)
        if theorem:
            if l >= a + math.sqrt(a):
                report.claim("F1_tilde", t1)
                report.scope["F1_tilde"] = "afirmado: l ≥ a+√a"
            else:
                report.scope["F1_tilde"] = "sin afirmación: l < a+√a"
            report.scope["F2_tilde"] = "sin afirmación: puede ser negativo"
            if k2:
                report.claim("protuberance", extra)
            # perímetro clásico del rectángulo estrictamente mayor
            if 2 * (a + b) + (2 if k2 else 0) > 4 * l + 2:
                report.claim("delta", t1 + t2 + extra)
            if C >= 2 and k1 - k2 > a:
                report.claim("delta_tilde", report.values["delta_tilde"])

    auxiliary = {"step7_f": step7_f(l, engine)}
    if l >= 2:
        auxiliary["lemma_f"] = lemma_f(l, engine)
    for name, value in auxiliary.items():
        if theorem:
            report.claim(name, value)
        else:
            report.values[name] = value
    return report
