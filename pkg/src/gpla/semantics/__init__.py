from __future__ import annotations

from .evaluator import (
    compose_rel,
    empty_rel,
    evaluate,
    generator_rel,
    identity_rel,
    member,
    opposite_rel,
    swap_rel,
    tensor_rel,
    union_rel,
)
from .exceptions import ArityMismatch, SemanticsError
from .model import ConstraintDocument, RelationDocument
from .schema import PLRelation

__all__ = [
    "ArityMismatch",
    "ConstraintDocument",
    "PLRelation",
    "RelationDocument",
    "SemanticsError",
    "compose_rel",
    "empty_rel",
    "evaluate",
    "generator_rel",
    "identity_rel",
    "member",
    "opposite_rel",
    "swap_rel",
    "tensor_rel",
    "union_rel",
]
