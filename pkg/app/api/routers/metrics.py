from fastapi import APIRouter
from ...core import metrics
from ...special.zeta import engines_stats

router = APIRouter(prefix="/metrics", tags=["metrics"])


@router.get("")
def get_metrics():
    snap = metrics.snapshot()
    return {
        **snap,
        "zeta_engines": engines_stats(),
    }
