from __future__ import annotations

from loguru import logger

from . import stdlib as stdlib
from .decide import Fails, Holds, equal_terms, subset_terms
from .normalform import pl_nf
from .semantics import PLRelation, evaluate, member
from .term import Term, parse, print_term

logger.disable("gpla")

__all__ = [
    "Fails",
    "Holds",
    "PLRelation",
    "Term",
    "equal_terms",
    "evaluate",
    "member",
    "parse",
    "pl_nf",
    "print_term",
    "stdlib",
    "subset_terms",
]
