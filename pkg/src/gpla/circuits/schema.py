from __future__ import annotations

from abc import ABC, abstractmethod
from enum import StrEnum
from fractions import Fraction
from typing import ClassVar, override

from attrs import field, frozen

from gpla.term import (
    ADD,
    CODEL,
    CODUP,
    COADD,
    COZERO,
    DEL,
    DUP,
    GEQ,
    ID,
    LEQ,
    SWAP,
    ZERO,
    Id,
    Term,
    cup,
    par,
    scl,
    seq,
    sym,
    union,
)

from .exceptions import InvalidElement, PortMismatch


class Port(StrEnum):
    ELECTRICAL = "e"
    """A terminal, compiled to a (voltage, current) pair of wires."""

    SIGNAL = "s"
    """A control or measurement value, compiled to a single wire."""

    @property
    def width(self) -> int:
        return 2 if self is Port.ELECTRICAL else 1


E, S = Port.ELECTRICAL, Port.SIGNAL

type Ports = tuple[Port, ...]


def width(ports: Ports) -> int:
    return sum(p.width for p in ports)


# Element translations. Left electrical ports carry (v1, i1), right ones
# (v2, i2); current is positive flowing left to right.


class Element(ABC):
    """A basic two-coloured circuit component with fixed port kinds."""

    left: ClassVar[Ports]
    right: ClassVar[Ports]
    tag: ClassVar[str]

    @abstractmethod
    def term(self) -> Term:
        """The relation between boundary wires, as a term."""

    def __str__(self) -> str:
        return self.tag


@frozen
class Resistor(Element):
    """`v1 - v2 = R·i`, `i1 = i2 = i`."""

    left: ClassVar[Ports] = (E,)
    right: ClassVar[Ports] = (E,)
    tag: ClassVar[str] = "res"

    resistance: Fraction = field(converter=Fraction)

    @resistance.validator
    def _check_resistance(self, _: object, value: Fraction) -> None:
        if value < 0:
            raise InvalidElement(f"negative resistance {value}")

    @override
    def term(self) -> Term:
        drop = seq(par(ID, scl(-self.resistance)), ADD)
        return seq(par(ID, DUP), par(drop, ID))

    @override
    def __str__(self) -> str:
        return f"res({self.resistance})"


@frozen
class Diode(Element):
    """
    Ideal diode: conducts with zero drop while `i >= 0`, blocks with `i = 0`
    while `v1 <= v2`.
    """

    left: ClassVar[Ports] = (E,)
    right: ClassVar[Ports] = (E,)
    tag: ClassVar[str] = "diode"

    @override
    def term(self) -> Term:
        conducting = par(ID, seq(DUP, par(ID, seq(GEQ, COZERO))))
        blocking = par(LEQ, seq(COZERO, ZERO))
        return union(conducting, blocking)


@frozen
class RDiode(Element):
    """An ideal diode mounted the other way round."""

    left: ClassVar[Ports] = (E,)
    right: ClassVar[Ports] = (E,)
    tag: ClassVar[str] = "rdiode"

    @override
    def term(self) -> Term:
        conducting = par(ID, seq(DUP, par(ID, seq(LEQ, COZERO))))
        blocking = par(GEQ, seq(COZERO, ZERO))
        return union(conducting, blocking)


@frozen
class VSource(Element):
    """Voltage source driven by the signal `s`: `v2 - v1 = s`, `i1 = i2`."""

    left: ClassVar[Ports] = (S, E)
    right: ClassVar[Ports] = (E,)
    tag: ClassVar[str] = "vsrc"

    @override
    def term(self) -> Term:
        return par(ADD, ID)


@frozen
class ISource(Element):
    """Current source driven by the signal `s`: `i1 = i2 = s`, voltages free."""

    left: ClassVar[Ports] = (S, E)
    right: ClassVar[Ports] = (E,)
    tag: ClassVar[str] = "isrc"

    @override
    def term(self) -> Term:
        return seq(par(DUP, DEL, ID), par(ID, cup(1)), par(CODEL, ID))


@frozen
class Ammeter(Element):
    """Ideal ammeter: a plain wire whose current is read out as `s`."""

    left: ClassVar[Ports] = (E,)
    right: ClassVar[Ports] = (E, S)
    tag: ClassVar[str] = "amm"

    @override
    def term(self) -> Term:
        return par(ID, DUP)


@frozen
class Voltmeter(Element):
    """Ideal voltmeter: no current, `s = v1 - v2`."""

    left: ClassVar[Ports] = (E,)
    right: ClassVar[Ports] = (E, S)
    tag: ClassVar[str] = "vmm"

    @override
    def term(self) -> Term:
        return seq(par(COADD, seq(COZERO, ZERO)), par(ID, SWAP))


@frozen
class Split(Element):
    """Junction: the voltage is shared and `i0 = i1 + i2`."""

    left: ClassVar[Ports] = (E,)
    right: ClassVar[Ports] = (E, E)
    tag: ClassVar[str] = "split"

    @override
    def term(self) -> Term:
        return seq(par(DUP, COADD), par(ID, SWAP, ID))


@frozen
class Merge(Element):
    """Junction: the voltages agree and `i = i1 + i2`."""

    left: ClassVar[Ports] = (E, E)
    right: ClassVar[Ports] = (E,)
    tag: ClassVar[str] = "merge"

    @override
    def term(self) -> Term:
        return seq(par(ID, SWAP, ID), par(CODUP, ADD))


@frozen
class OpenEnd(Element):
    """A dangling terminal: `i = 0`, `v` free."""

    left: ClassVar[Ports] = (E,)
    right: ClassVar[Ports] = ()
    tag: ClassVar[str] = "open"

    @override
    def term(self) -> Term:
        return par(DEL, COZERO)


@frozen
class Start(Element):
    left: ClassVar[Ports] = ()
    right: ClassVar[Ports] = (E,)
    tag: ClassVar[str] = "start"

    @override
    def term(self) -> Term:
        return par(CODEL, ZERO)


# Circuit terms. Like term nodes, each caches its boundary and rejects
# ill-typed composites at construction.


@frozen
class Elem:
    element: Element
    left: Ports = field(init=False, eq=False, repr=False)
    right: Ports = field(init=False, eq=False, repr=False)

    def __attrs_post_init__(self) -> None:
        object.__setattr__(self, "left", self.element.left)
        object.__setattr__(self, "right", self.element.right)


@frozen
class EId:
    """An electrical wire."""

    left: Ports = field(init=False, eq=False, repr=False, default=(E,))
    right: Ports = field(init=False, eq=False, repr=False, default=(E,))


@frozen
class SId:
    """A signal wire."""

    left: Ports = field(init=False, eq=False, repr=False, default=(S,))
    right: Ports = field(init=False, eq=False, repr=False, default=(S,))


@frozen
class ESwap:
    """Crossing of two ports of the given kinds."""

    top: Port = E
    bottom: Port = E
    left: Ports = field(init=False, eq=False, repr=False)
    right: Ports = field(init=False, eq=False, repr=False)

    def __attrs_post_init__(self) -> None:
        object.__setattr__(self, "left", (self.top, self.bottom))
        object.__setattr__(self, "right", (self.bottom, self.top))


@frozen
class ESeq:
    first: CircuitTerm
    second: CircuitTerm
    left: Ports = field(init=False, eq=False, repr=False)
    right: Ports = field(init=False, eq=False, repr=False)

    def __attrs_post_init__(self) -> None:
        if self.first.right != self.second.left:
            raise PortMismatch(
                f"cannot compose {_render(self.first.right)} "
                f"with {_render(self.second.left)}",
                (self.first, self.second),
            )
        object.__setattr__(self, "left", self.first.left)
        object.__setattr__(self, "right", self.second.right)


@frozen
class EPar:
    top: CircuitTerm
    bottom: CircuitTerm
    left: Ports = field(init=False, eq=False, repr=False)
    right: Ports = field(init=False, eq=False, repr=False)

    def __attrs_post_init__(self) -> None:
        object.__setattr__(self, "left", self.top.left + self.bottom.left)
        object.__setattr__(self, "right", self.top.right + self.bottom.right)


type CircuitTerm = Elem | EId | SId | ESwap | ESeq | EPar


def ports(c: CircuitTerm) -> tuple[Ports, Ports]:
    """Left and right port kinds of `c`."""
    return c.left, c.right


def _render(ps: Ports) -> str:
    return "(" + ", ".join(p.value for p in ps) + ")"


def swap_term(top: Port, bottom: Port) -> Term:
    return sym(top.width, bottom.width)


def wire_term(port: Port) -> Term:
    return Id(port.width)
