"""
Formato de texto de poliominós.

Dos variantes, detectadas por el primer carácter no blanco:
  - pares "x y", uno por línea;
  - rejilla ASCII con '#' = celda y '.' = vacío, filas de arriba abajo.
"""
from pathlib import Path
from typing import List, Tuple, Union

from ..core.errors import PolyominoFormatError
from .lattice import Polyomino

GRID_CHARS = {"#", "."}


def parse_polyomino(text: str) -> Polyomino:
    stripped = text.strip()
    if not stripped:
        raise PolyominoFormatError("texto vacío")
    if stripped[0] in GRID_CHARS:
        return _parse_grid(stripped)
    return _parse_pairs(stripped)


def _parse_grid(text: str) -> Polyomino:
    rows = [line.strip() for line in text.splitlines() if line.strip()]
    cells: List[Tuple[int, int]] = []
    top = len(rows) - 1
    for r, row in enumerate(rows):
        for x, ch in enumerate(row):
            if ch == "#":
                cells.append((x, top - r))
            elif ch != ".":
                raise PolyominoFormatError(f"carácter inesperado {ch!r} en la fila {r + 1}")
    if not cells:
        raise PolyominoFormatError("la rejilla no contiene celdas '#'")
    return Polyomino.from_cells(cells)


def _parse_pairs(text: str) -> Polyomino:
    cells: List[Tuple[int, int]] = []
    for n, line in enumerate(text.splitlines(), start=1):
        parts = line.replace(",", " ").split()
        if not parts:
            continue
        if len(parts) != 2:
            raise PolyominoFormatError(f"línea {n}: se esperaban dos enteros, hay {len(parts)} campos")
        try:
            cells.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise PolyominoFormatError(f"línea {n}: {line.strip()!r} no son enteros")
    if len(set(cells)) != len(cells):
        raise PolyominoFormatError("celdas duplicadas")
    return Polyomino.from_cells(cells)


def format_polyomino(p: Polyomino, style: str = "grid") -> str:
    if style == "pairs":
        return "\n".join(f"{c.x} {c.y}" for c in p) + "\n"
    lines = []
    for y in range(p.height - 1, -1, -1):
        lines.append("".join("#" if (x, y) in p else "." for x in range(p.width)))
    return "\n".join(lines) + "\n"


def read_polyomino(path: Union[str, Path]) -> Polyomino:
    """Lee un fichero de poliominó (OSError si no existe)."""
    return parse_polyomino(Path(path).read_text(encoding="utf-8"))


def write_polyomino(path: Union[str, Path], p: Polyomino, style: str = "grid"):
    Path(path).write_text(format_polyomino(p, style), encoding="utf-8")
