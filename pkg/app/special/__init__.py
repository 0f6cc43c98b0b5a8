"""
Funciones especiales - zeta de Hurwitz certificada e identidades de suma.
"""

from .zeta import (
    ZetaEngine,
    get_engine,
    hurwitz_zeta,
    hurwitz_zeta_continued,
    hurwitz_zeta_dl,
    hurwitz_zeta_real,
    power_sum,
    zeta_difference,
)
from .identities import (
    zeta_identity_boundsum,
    zeta_identity_for_a1,
    zeta_identity_forgen,
)

__all__ = [
    "ZetaEngine",
    "get_engine",
    "hurwitz_zeta",
    "hurwitz_zeta_continued",
    "hurwitz_zeta_dl",
    "hurwitz_zeta_real",
    "power_sum",
    "zeta_difference",
    "zeta_identity_boundsum",
    "zeta_identity_for_a1",
    "zeta_identity_forgen",
]
