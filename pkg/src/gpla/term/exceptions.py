from __future__ import annotations

from typing import TYPE_CHECKING

from gpla.utils.parsing import TextSyntaxError

if TYPE_CHECKING:
    from .schema import Term


class TermError(Exception):
    """Base exception for the term module."""


class TermTypeError(TermError, TypeError):
    """Raised when a constructor receives operands whose arities do not fit."""

    def __init__(self, message: str, operands: tuple[Term, ...]) -> None:
        super().__init__(message)
        self.operands = operands


class ParseError(TermError, TextSyntaxError):
    """Raised when term text does not conform to the grammar."""
