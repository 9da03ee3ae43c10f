from __future__ import annotations

from loguru import logger

from gpla.semantics import PLRelation, evaluate
from gpla.term import Term, par, seq

from .schema import CircuitTerm, EId, Elem, EPar, ESeq, ESwap, Port, SId, swap_term, wire_term

_log = logger.bind(component="circuits")


def compile_circuit(c: CircuitTerm) -> Term:
    """
    Translate a circuit into a term.

    Every electrical port becomes two wires, voltage above current; every
    signal port becomes one wire.
    """
    match c:
        case Elem(element=element):
            return element.term()
        case EId():
            return wire_term(Port.ELECTRICAL)
        case SId():
            return wire_term(Port.SIGNAL)
        case ESwap(top=top, bottom=bottom):
            return swap_term(top, bottom)
        case ESeq(first=a, second=b):
            return seq(compile_circuit(a), compile_circuit(b))
        case EPar(top=a, bottom=b):
            return par(compile_circuit(a), compile_circuit(b))


def solve(c: CircuitTerm) -> PLRelation:
    """The exact behaviour of `c` between its boundary wires."""
    rel = evaluate(compile_circuit(c))
    _log.info(
        "solved circuit {} → {}: {} cells", _kinds(c.left), _kinds(c.right), len(rel)
    )
    return rel


def _kinds(ports: tuple[Port, ...]) -> str:
    return "".join(p.value for p in ports) or "()"
