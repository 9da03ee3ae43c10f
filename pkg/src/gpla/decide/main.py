from __future__ import annotations

from loguru import logger

from gpla.normalform import InternalError, extend_to, interior_point, pl_nf, shared_hyperplanes
from gpla.semantics import ArityMismatch, PLRelation, evaluate, member
from gpla.term import Term

from .schema import Fails, Holds, Verdict

_log = logger.bind(component="decide")


def subset(d: PLRelation, c: PLRelation) -> Verdict:
    """
    Decide `d ⊆ c`.

    Both sides are brought into normal form over one shared hyperplane list.
    Each cell of `d` is then checked at an interior point: if no cell of `c`
    holds that point, it is a counterexample; if one does, the whole cell of
    `d` lies inside it.
    """
    if d.arity != c.arity:
        raise ArityMismatch(f"cannot compare {d.arity} with {c.arity}")

    nf_d, nf_c = pl_nf(d), pl_nf(c)
    shared = shared_hyperplanes(nf_d, nf_c)
    nf_d, nf_c = extend_to(nf_d, shared), extend_to(nf_c, shared)

    for cell in nf_d.cells:
        x = interior_point(nf_d, cell)
        container = next(
            (other for other in nf_c.cells if nf_c.cell_polyhedron(other).contains(x)),
            None,
        )
        if container is None:
            _log.debug("counterexample {} in cell {}", x, cell.valuation)
            return Fails(x)
        for mine, theirs in zip(cell.valuation, container.valuation, strict=True):
            if not mine.implies(theirs):
                raise InternalError(
                    f"interior point {x} lies in a cell its own cell does not fit in"
                )
    return Holds()


def equal(d: PLRelation, c: PLRelation) -> Verdict:
    match subset(d, c):
        case Fails() as verdict:
            return verdict
        case Holds():
            return subset(c, d)


def subset_terms(t: Term, u: Term) -> Verdict:
    return subset(evaluate(t), evaluate(u))


def equal_terms(t: Term, u: Term) -> Verdict:
    return equal(evaluate(t), evaluate(u))


def counterexample_holds(verdict: Verdict, d: PLRelation, c: PLRelation) -> bool:
    """Exact re-check of a verdict's counterexample; `Holds` verdicts pass trivially."""
    match verdict:
        case Fails(counterexample=x):
            return member(x, d) and not member(x, c)
        case Holds():
            return True
