from __future__ import annotations

from .builder import parallel, series, stack, transistor
from .compiler import compile_circuit, solve
from .exceptions import CircuitError, CircuitParseError, InvalidElement, PortMismatch
from .parser import CircuitParser, parse_circuit
from .schema import (
    Ammeter,
    CircuitTerm,
    Diode,
    E,
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
    Ports,
    RDiode,
    Resistor,
    S,
    SId,
    Split,
    Start,
    Voltmeter,
    VSource,
    ports,
)

__all__ = [
    "Ammeter",
    "CircuitError",
    "CircuitParseError",
    "CircuitParser",
    "CircuitTerm",
    "Diode",
    "E",
    "EId",
    "EPar",
    "ESeq",
    "ESwap",
    "Elem",
    "Element",
    "ISource",
    "InvalidElement",
    "Merge",
    "OpenEnd",
    "Port",
    "PortMismatch",
    "Ports",
    "RDiode",
    "Resistor",
    "S",
    "SId",
    "Split",
    "Start",
    "VSource",
    "Voltmeter",
    "compile_circuit",
    "parallel",
    "parse_circuit",
    "ports",
    "series",
    "solve",
    "stack",
    "transistor",
]
