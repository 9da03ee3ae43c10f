from __future__ import annotations

from .generators import random_polyhedron, random_term
from .oracle import check_chain, grid_compare
from .schema import DEFAULT_RADIUS, DEFAULT_STEP, GridOracle, GridReport

__all__ = [
    "DEFAULT_RADIUS",
    "DEFAULT_STEP",
    "GridOracle",
    "GridReport",
    "check_chain",
    "grid_compare",
    "random_polyhedron",
    "random_term",
]
