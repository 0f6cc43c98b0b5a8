"""
Geometría de red - poliominós, tiras, clases de forma y familias canónicas.
"""

from .lattice import (
    Cell,
    Orientation,
    Polyomino,
    ShapeClass,
    Strip,
    canonicalize,
    classify,
    orbit_key,
    rotate,
    strips,
    symmetries,
)
from .shapes import ShapeFamily, ShapeSpec, Side, realize
from .io import format_polyomino, parse_polyomino, read_polyomino, write_polyomino

__all__ = [
    "Cell",
    "Orientation",
    "Polyomino",
    "ShapeClass",
    "ShapeFamily",
    "ShapeSpec",
    "Side",
    "Strip",
    "canonicalize",
    "classify",
    "format_polyomino",
    "orbit_key",
    "parse_polyomino",
    "read_polyomino",
    "realize",
    "rotate",
    "strips",
    "symmetries",
    "write_polyomino",
]
