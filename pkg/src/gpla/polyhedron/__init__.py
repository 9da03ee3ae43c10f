from __future__ import annotations

from .exceptions import DimensionMismatch, InvalidPermutation, PolyhedronError
from .fme import FME_ROW_WARNING, eliminate, eliminate_all, is_empty, project
from .query import is_subset, range_of, sample_point, strict_witness
from .schema import (
    Constraint,
    EmptyInterval,
    Interval,
    LinExpr,
    NoPoint,
    NoWitness,
    Point,
    Polyhedron,
    Range,
    Rat,
    Rel,
    direct_sum,
    intersect,
    reindex,
)

__all__ = [
    "FME_ROW_WARNING",
    "Constraint",
    "DimensionMismatch",
    "EmptyInterval",
    "Interval",
    "InvalidPermutation",
    "LinExpr",
    "NoPoint",
    "NoWitness",
    "Point",
    "Polyhedron",
    "PolyhedronError",
    "Range",
    "Rat",
    "Rel",
    "direct_sum",
    "eliminate",
    "eliminate_all",
    "intersect",
    "is_empty",
    "is_subset",
    "project",
    "range_of",
    "reindex",
    "sample_point",
    "strict_witness",
]
