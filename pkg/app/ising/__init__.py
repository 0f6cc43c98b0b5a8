"""
Modelo de Ising bi-axial - paisaje de energía, longitud crítica y corrección en el toro.
"""

from .landscape import (
    CriticalLength,
    Landscape,
    LandscapePoint,
    ModelParams,
    anisotropy_gap,
    critical_length,
    critical_length_square,
    critical_surface,
    d2_table,
    d2f_dl2,
    delta_H,
    df_dl,
    f_continuous,
    f_square,
    hamiltonian_excitation,
    landscape,
    short_range_critical_area,
    short_range_delta_H,
    stationary_point,
)
from .torus import TorusCorrection, torus_correction_bound, torus_perimeter

__all__ = [
    "CriticalLength",
    "Landscape",
    "LandscapePoint",
    "ModelParams",
    "TorusCorrection",
    "anisotropy_gap",
    "critical_length",
    "critical_length_square",
    "critical_surface",
    "d2_table",
    "d2f_dl2",
    "delta_H",
    "df_dl",
    "f_continuous",
    "f_square",
    "hamiltonian_excitation",
    "landscape",
    "short_range_critical_area",
    "short_range_delta_H",
    "stationary_point",
    "torus_correction_bound",
    "torus_perimeter",
]
