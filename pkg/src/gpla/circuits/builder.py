from __future__ import annotations

from functools import reduce

from .exceptions import PortMismatch
from .schema import (
    E,
    Ammeter,
    CircuitTerm,
    Diode,
    EId,
    Elem,
    EPar,
    ESeq,
    ISource,
    Merge,
    SId,
    Split,
)


def series(*cs: CircuitTerm) -> CircuitTerm:
    if not cs:
        raise ValueError("series needs at least one circuit")
    return reduce(ESeq, cs)


def stack(*cs: CircuitTerm) -> CircuitTerm:
    if not cs:
        raise ValueError("stack needs at least one circuit")
    return reduce(EPar, cs)


def parallel(top: CircuitTerm, bottom: CircuitTerm) -> CircuitTerm:
    """Two one-terminal-each-side branches joined between the same two nodes."""
    for branch in (top, bottom):
        if branch.left != (E,) or branch.right != (E,):
            raise PortMismatch("parallel branches must be (e) → (e)", (top, bottom))
    return series(Elem(Split()), EPar(top, bottom), Elem(Merge()))


def transistor() -> CircuitTerm:
    """
    Idealized transistor, `(e, e) → (e)`: emitter and collector in, base out.

    The emitter branch runs through an ammeter and a diode; the collector
    branch is a current source driven by the ammeter reading. Both branches
    meet at the base node.
    """
    return series(
        stack(Elem(Ammeter()), EId()),
        stack(Elem(Diode()), SId(), EId()),
        stack(EId(), Elem(ISource())),
        Elem(Merge()),
    )
