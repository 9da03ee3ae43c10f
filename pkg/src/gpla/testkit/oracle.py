from __future__ import annotations

from collections.abc import Sequence

from gpla.decide import Verdict, equal_terms
from gpla.polyhedron import Point
from gpla.semantics import ArityMismatch, PLRelation, member
from gpla.term import Term

from .schema import GridOracle, GridReport


def grid_compare(r: PLRelation, s: PLRelation, oracle: GridOracle | None = None) -> GridReport:
    """Classify every grid point by exact membership in `r` and `s`."""
    if r.arity != s.arity:
        raise ArityMismatch(f"cannot compare {r.arity} with {s.arity}")
    oracle = oracle or GridOracle()

    both = neither = 0
    left_only: list[Point] = []
    right_only: list[Point] = []
    for x in oracle.points(r.dim):
        match member(x, r), member(x, s):
            case True, True:
                both += 1
            case True, False:
                left_only.append(x)
            case False, True:
                right_only.append(x)
            case _:
                neither += 1
    return GridReport(both, neither, tuple(left_only), tuple(right_only))


def check_chain(terms: Sequence[Term]) -> list[Verdict]:
    """Decide each consecutive step of a displayed derivation."""
    return [equal_terms(a, b) for a, b in zip(terms, terms[1:], strict=False)]
