from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction
from typing import ClassVar, Final, override

from attrs import define

from gpla.utils.parsing import Arg, DescentParser, TextSyntaxError, Token

from .exceptions import CircuitError, CircuitParseError
from .schema import (
    Ammeter,
    CircuitTerm,
    Diode,
    EId,
    Element,
    Elem,
    EPar,
    ESeq,
    ESwap,
    ISource,
    Merge,
    OpenEnd,
    Port,
    RDiode,
    Resistor,
    SId,
    Split,
    Start,
    Voltmeter,
    VSource,
)

_PLAIN_ELEMENTS: Final[dict[str, type[Element]]] = {
    cls.tag: cls
    for cls in (
        Diode,
        RDiode,
        VSource,
        ISource,
        Ammeter,
        Voltmeter,
        Split,
        Merge,
        OpenEnd,
        Start,
    )
}
_BUILTIN_NAMES: Final = ("res", "ewire", "swire", "sw")


@define
class CircuitParser(DescentParser[CircuitTerm]):
    error_type: ClassVar[type[TextSyntaxError]] = CircuitParseError
    allow_union: ClassVar[bool] = False

    @override
    def atom_names(self) -> Sequence[str]:
        return sorted([*_PLAIN_ELEMENTS, *_BUILTIN_NAMES])

    @override
    def named_atom(self, name: str, args: list[Arg] | None, token: Token) -> CircuitTerm:
        try:
            return self._build(name, args, token)
        except (CircuitError, ValueError) as e:
            if isinstance(e, CircuitParseError):
                raise
            raise CircuitParseError(f"invalid atom {name!r}: {e}", token.pos, ()) from e

    @override
    def make_seq(self, left: CircuitTerm, right: CircuitTerm) -> CircuitTerm:
        return ESeq(left, right)

    @override
    def make_par(self, left: CircuitTerm, right: CircuitTerm) -> CircuitTerm:
        return EPar(left, right)

    def _build(self, name: str, args: list[Arg] | None, token: Token) -> CircuitTerm:
        if name in _PLAIN_ELEMENTS:
            if args is not None:
                raise ValueError("takes no arguments")
            return Elem(_PLAIN_ELEMENTS[name]())

        match name, args:
            case "res", [Fraction() as r]:
                return Elem(Resistor(r))
            case "res", _:
                raise ValueError("expects one rational resistance")
            case "ewire", None:
                return EId()
            case "swire", None:
                return SId()
            case "sw", None:
                return ESwap()
            case "sw", [str() as top, str() as bottom]:
                return ESwap(Port(top), Port(bottom))
            case "sw", _:
                raise ValueError("expects two port kinds, e or s")
            case ("ewire" | "swire"), _:
                raise ValueError("takes no arguments")
        raise CircuitParseError(f"unknown atom {name!r}", token.pos, self.atom_names())


def parse_circuit(text: str) -> CircuitTerm:
    """Parse circuit text: element atoms joined by `;` and `&`."""
    return CircuitParser(text).parse()
