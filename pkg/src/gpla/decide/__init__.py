from __future__ import annotations

from .main import counterexample_holds, equal, equal_terms, subset, subset_terms
from .schema import Fails, Holds, Verdict

__all__ = [
    "Fails",
    "Holds",
    "Verdict",
    "counterexample_holds",
    "equal",
    "equal_terms",
    "subset",
    "subset_terms",
]
