from typing import List, Optional

from fastapi import APIRouter, Query
from pydantic import BaseModel

from ...catalog.minimizers import argmin_shape, crossover_points, minimal_specs
from ...special.zeta import get_engine

router = APIRouter(prefix="/minimizers", tags=["minimizers"])


class MinimizerRow(BaseModel):
    n: int
    shapes: List[str]
    per_lambda: float
    classical: int


class CrossoverResponse(BaseModel):
    n: int
    shapes: List[str]
    lambda_star: Optional[float]


@router.get("", response_model=List[MinimizerRow])
def list_minimizers(
    lam: float = Query(2.0, alias="lambda", gt=1.0),
    n_max: int = Query(30, ge=1, le=500),
):
    engine = get_engine(lam)
    rows = []
    for n in range(1, n_max + 1):
        entries = argmin_shape(n, engine)
        rows.append(MinimizerRow(
            n=n,
            shapes=[e.spec.label for e in entries],
            per_lambda=entries[0].nonlocal_perimeter,
            classical=entries[0].classical_perimeter,
        ))
    return rows


@router.get("/crossover", response_model=CrossoverResponse)
def crossover(n: int = Query(..., ge=1, le=500)):
    # NoTwoShapes llega como 422 desde el manejador global
    points = crossover_points(n)
    return CrossoverResponse(
        n=n,
        shapes=[s.label for s in minimal_specs(n)],
        lambda_star=points[0].lambda_star if points else None,
    )
