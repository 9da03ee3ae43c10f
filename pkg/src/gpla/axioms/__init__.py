from __future__ import annotations

from .catalog import DEFAULT_SCALARS, all_axioms, derived_laws, negative_controls
from .exceptions import AxiomError
from .model import CheckRow, SuiteReport
from .runner import AxiomSuite, check_axiom, check_derived_laws
from .schema import Axiom, AxiomKind, Outcome, ScalarCondition

__all__ = [
    "DEFAULT_SCALARS",
    "Axiom",
    "AxiomError",
    "AxiomKind",
    "AxiomSuite",
    "CheckRow",
    "Outcome",
    "ScalarCondition",
    "SuiteReport",
    "all_axioms",
    "check_axiom",
    "check_derived_laws",
    "derived_laws",
    "negative_controls",
]
