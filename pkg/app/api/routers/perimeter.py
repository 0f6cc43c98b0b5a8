from typing import List, Optional

from fastapi import APIRouter
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ...core.errors import PolyominoFormatError
from ...core.logging import compute_context
from ...core.settings import settings
from ...geometry.io import parse_polyomino
from ...geometry.lattice import Polyomino, classify
from ...perimeter.nonlocal_perimeter import classical_perimeter, perimeter, perimeter_direct
from ...special.zeta import get_engine

router = APIRouter(prefix="/perimeter", tags=["perimeter"])


class PerimeterRequest(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    lam: float = Field(alias="lambda", gt=1.0)
    cells: Optional[List[List[int]]] = None
    text: Optional[str] = None  # pares "x y" o rejilla '#'/'.'
    direct: bool = False
    window: int = Field(default=settings.DIRECT_WINDOW, ge=1)

    @model_validator(mode="after")
    def _one_source(self):
        if (self.cells is None) == (self.text is None):
            raise ValueError("indique exactamente uno de 'cells' o 'text'")
        return self


class PerimeterResponse(BaseModel):
    horizontal: float
    vertical: float
    total: float
    classical: int
    shape_class: str


def _polyomino(req: PerimeterRequest) -> Polyomino:
    if req.text is not None:
        return parse_polyomino(req.text)
    if any(len(c) != 2 for c in req.cells):
        raise PolyominoFormatError("cada celda debe ser un par [x, y]")
    if len({tuple(c) for c in req.cells}) != len(req.cells):
        raise PolyominoFormatError("celdas duplicadas")
    return Polyomino.from_cells(req.cells)


@router.post("", response_model=PerimeterResponse)
def compute_perimeter(req: PerimeterRequest):
    p = _polyomino(req)
    engine = get_engine(req.lam)
    with compute_context(operation="perimeter", **{"lambda": req.lam}, n=p.area):
        breakdown = perimeter_direct(p, engine, req.window) if req.direct else perimeter(p, engine)
    return PerimeterResponse(
        **breakdown.to_dict(),
        classical=classical_perimeter(p),
        shape_class=classify(p).value,
    )
