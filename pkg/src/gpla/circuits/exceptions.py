from __future__ import annotations

from typing import TYPE_CHECKING

from gpla.utils.parsing import TextSyntaxError

if TYPE_CHECKING:
    from .schema import CircuitTerm


class CircuitError(Exception):
    """Base exception for the circuits module."""


class PortMismatch(CircuitError, TypeError):
    """Raised when composed circuits disagree on their boundary port kinds."""

    def __init__(self, message: str, operands: tuple[CircuitTerm, ...]) -> None:
        super().__init__(message)
        self.operands = operands


class InvalidElement(CircuitError, ValueError):
    """Raised for element parameters outside their physical range."""


class CircuitParseError(CircuitError, TextSyntaxError):
    """Raised when circuit text does not conform to the grammar."""
