"""
Catálogo de minimizadores - 𝓜ₙ, 𝓜ₙᵉˣᵗ, cruces de forma y diagnósticos de positividad.
"""

from .minimizers import (
    Catalog,
    CatalogEntry,
    Crossover,
    Decomposition,
    argmin_shape,
    catalog,
    catalog_realizations,
    crossover_between,
    crossover_lambda,
    crossover_points,
    decompose,
    extended_catalog,
    lambda_c,
    minimal_specs,
)
from .diagnostics import DiagnosticsReport, positivity_diagnostics

__all__ = [
    "Catalog",
    "CatalogEntry",
    "Crossover",
    "Decomposition",
    "DiagnosticsReport",
    "argmin_shape",
    "catalog",
    "catalog_realizations",
    "crossover_between",
    "crossover_lambda",
    "crossover_points",
    "decompose",
    "extended_catalog",
    "lambda_c",
    "minimal_specs",
    "positivity_diagnostics",
]
