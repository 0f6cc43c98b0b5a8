"""
Identidades de suma de ζ(λ, i) y sumas ponderadas de potencias.

Cada identidad devuelve el par (lhs, rhs): lhs sumado término a término con el
motor, rhs en forma cerrada. Los tests comparan ambos con la tolerancia escalada.
"""
import math
from typing import Tuple

from .zeta import ZetaEngine


def weighted_power_sum(engine: ZetaEngine, m: int, weight: float) -> float:
    """Σ_{k=1}^{m} (weight − k) k^{-λ}."""
    if m <= 0:
        return 0.0
    return weight * engine.prefix(m) - engine.prefix(m, shift=1.0)


def power_range(engine: ZetaEngine, lo: int, hi: int) -> float:
    """Σ_{k=lo}^{hi} k^{-λ} (0 si el rango es vacío)."""
    lo = max(lo, 1)
    if hi < lo:
        return 0.0
    return engine.prefix(hi) - engine.prefix(lo - 1)


def zeta_range(engine: ZetaEngine, a: int, b: int) -> float:
    """Σ_{i=a}^{b} ζ(λ, i) sumado término a término."""
    return math.fsum(engine.zeta(i) for i in range(a, b + 1))


def zeta_identity_for_a1(engine: ZetaEngine, B: int) -> Tuple[float, float]:
    """Σ_{i=1}^{B} ζ(λ, i) = B ζ(λ) − Σ_{k=1}^{B-1} (B−k)/k^λ."""
    if B < 1:
        raise ValueError("B debe ser ≥ 1")
    lhs = zeta_range(engine, 1, B)
    rhs = B * engine.zeta(1) - weighted_power_sum(engine, B - 1, B)
    return lhs, rhs


def zeta_identity_forgen(engine: ZetaEngine, A: int, B: int) -> Tuple[float, float]:
    """
    Σ_{i=A}^{B} ζ(λ, i) = (B−A+1) ζ(λ) − Σ_{k=1}^{B-1} (B−k)/k^λ + Σ_{k=1}^{A-2} (A−1−k)/k^λ.
    """
    if not 1 <= A <= B:
        raise ValueError(f"se requiere 1 ≤ A ≤ B (A={A}, B={B})")
    lhs = zeta_range(engine, A, B)
    rhs = (
        (B - A + 1) * engine.zeta(1)
        - weighted_power_sum(engine, B - 1, B)
        + weighted_power_sum(engine, A - 2, A - 1)
    )
    return lhs, rhs


def zeta_identity_boundsum(engine: ZetaEngine, A: int, B: int, C: int) -> Tuple[float, float]:
    """Σ_{i=A+C}^{B+C} ζ(λ, i) = Σ_{i=A}^{B} ζ(λ, i) − Σ_{i=A}^{B} Σ_{k=i}^{C-1+i} 1/k^λ."""
    if not 1 <= A <= B or C < 0:
        raise ValueError(f"se requiere 1 ≤ A ≤ B y C ≥ 0 (A={A}, B={B}, C={C})")
    lhs = zeta_range(engine, A + C, B + C)
    inner = math.fsum(power_range(engine, i, C - 1 + i) for i in range(A, B + 1))
    rhs = zeta_range(engine, A, B) - inner
    return lhs, rhs
