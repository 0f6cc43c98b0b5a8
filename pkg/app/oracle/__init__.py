"""
Oráculo - enumeración exhaustiva, muestreo de configuraciones desconexas y verificación.
"""

from .enumeration import (
    EnumerationReport,
    ReductionConsistencyReport,
    enumerate_by_growth,
    enumerate_connected,
    sample_disconnected,
    verify_reduction_consistency,
    verify_theorem,
)

__all__ = [
    "EnumerationReport",
    "ReductionConsistencyReport",
    "enumerate_by_growth",
    "enumerate_connected",
    "sample_disconnected",
    "verify_reduction_consistency",
    "verify_theorem",
]
