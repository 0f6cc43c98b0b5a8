from typing import Dict, List, Optional

from fastapi import APIRouter, Query
from pydantic import BaseModel

from ...core.logging import compute_context
from ...ising.landscape import ModelParams, critical_length_square, landscape

router = APIRouter(prefix="/landscape", tags=["landscape"])


class LandscapeResponse(BaseModel):
    points: List[Dict]
    n_c: int
    ties: List[int]
    critical_length: int


class CriticalLengthResponse(BaseModel):
    l_c: Optional[int]
    argmax: int
    stationary_point: Optional[float]
    values: List[float]


@router.get("", response_model=LandscapeResponse)
def get_landscape(
    lam: float = Query(..., alias="lambda", gt=1.0),
    h: float = Query(..., gt=0.0),
    n_max: int = Query(250, ge=4, le=10_000),
):
    with compute_context(operation="landscape", **{"lambda": lam}, h=h):
        result = landscape(ModelParams(lam=lam, h=h), n_max)
    return LandscapeResponse(
        points=[p.to_dict() for p in result.points],
        n_c=result.n_c,
        ties=result.ties,
        critical_length=result.critical_length,
    )


@router.get("/critical-length", response_model=CriticalLengthResponse)
def get_critical_length(
    lam: float = Query(..., alias="lambda", gt=1.0),
    h: float = Query(..., gt=0.0),
    l_max: int = Query(200, ge=2, le=5_000),
):
    result = critical_length_square(ModelParams(lam=lam, h=h), l_max)
    return CriticalLengthResponse(
        l_c=result.l_c,
        argmax=result.argmax,
        stationary_point=result.stationary_point,
        values=result.values,
    )
