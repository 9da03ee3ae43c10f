from __future__ import annotations

import re
from abc import ABC, abstractmethod
from collections.abc import Sequence
from fractions import Fraction
from typing import ClassVar, Final

from attrs import define, field, frozen

_TOKEN_RE: Final = re.compile(
    r"(?P<num>-?\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[;&|(),\[\]])"
)

type Arg = Fraction | str | tuple[Fraction, ...]
"""A macro argument: a rational, a bare name, or a bracketed rational list."""


class TextSyntaxError(ValueError):
    """Raised when operator-grammar text cannot be parsed."""

    def __init__(self, message: str, position: int, expected: Sequence[str]) -> None:
        self.position = position
        self.expected = tuple(expected)
        detail = f" (expected {', '.join(self.expected)})" if self.expected else ""
        super().__init__(f"{message} at position {position}{detail}")


@frozen
class Token:
    kind: str
    """One of `num`, `name`, `op`, or `end`."""

    text: str
    pos: int


def tokenize(text: str, error_type: type[TextSyntaxError]) -> list[Token]:
    tokens: list[Token] = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        match = _TOKEN_RE.match(text, pos)
        if match is None or match.lastgroup is None:
            raise error_type(f"unexpected character {text[pos]!r}", pos, ())
        tokens.append(Token(kind=match.lastgroup, text=match.group(), pos=pos))
        pos = match.end()
    tokens.append(Token(kind="end", text="", pos=len(text)))
    return tokens


@define
class DescentParser[T](ABC):
    """
    Recursive-descent parser for the shared diagram operator grammar.

    `|` binds loosest and nests to the right, then `;`, then `&`; both of the
    latter nest to the left. Subclasses supply atoms and node constructors.
    """

    text: str

    error_type: ClassVar[type[TextSyntaxError]] = TextSyntaxError
    allow_union: ClassVar[bool] = True

    _tokens: list[Token] = field(init=False)
    _index: int = field(init=False, default=0)

    def __attrs_post_init__(self) -> None:
        self._tokens = tokenize(self.text, self.error_type)

    def parse(self) -> T:
        node = self._union()
        if self._peek().kind != "end":
            raise self.fail("unexpected token", ["end of input"])
        return node

    @abstractmethod
    def atom_names(self) -> Sequence[str]:
        """Names accepted in atom position, used for error messages."""

    @abstractmethod
    def named_atom(self, name: str, args: list[Arg] | None, token: Token) -> T:
        """Build the node for a named atom, with its call arguments if any."""

    @abstractmethod
    def make_seq(self, left: T, right: T) -> T: ...

    @abstractmethod
    def make_par(self, left: T, right: T) -> T: ...

    def make_union(self, left: T, right: T) -> T:
        raise NotImplementedError

    def fail(self, message: str, expected: Sequence[str]) -> TextSyntaxError:
        token = self._peek()
        found = token.text or "end of input"
        return self.error_type(f"{message} {found!r}", token.pos, expected)

    def _peek(self) -> Token:
        return self._tokens[self._index]

    def _advance(self) -> Token:
        token = self._tokens[self._index]
        self._index += 1
        return token

    def _accept(self, op: str) -> bool:
        token = self._peek()
        if token.kind == "op" and token.text == op:
            self._index += 1
            return True
        return False

    def _expect(self, op: str) -> None:
        if not self._accept(op):
            raise self.fail("unexpected token", [repr(op)])

    def _union(self) -> T:
        parts = [self._seq()]
        while self._peek().text == "|" and self._peek().kind == "op":
            if not self.allow_union:
                raise self.fail("union is not allowed", [";", "&"])
            self._advance()
            parts.append(self._seq())
        node = parts[-1]
        for part in reversed(parts[:-1]):
            node = self.make_union(part, node)
        return node

    def _seq(self) -> T:
        node = self._par()
        while self._accept(";"):
            node = self.make_seq(node, self._par())
        return node

    def _par(self) -> T:
        node = self._atom()
        while self._accept("&"):
            node = self.make_par(node, self._atom())
        return node

    def _atom(self) -> T:
        if self._accept("("):
            node = self._union()
            self._expect(")")
            return node

        token = self._peek()
        if token.kind != "name":
            raise self.fail("unexpected token", ["'('", *self.atom_names()])
        self._advance()

        args = self._call_args() if self._peek().text == "(" else None
        return self.named_atom(token.text, args, token)

    def _call_args(self) -> list[Arg]:
        self._expect("(")
        args: list[Arg] = []
        if self._accept(")"):
            return args
        while True:
            args.append(self._arg())
            if self._accept(")"):
                return args
            self._expect(",")

    def _arg(self) -> Arg:
        token = self._peek()
        match token.kind:
            case "num":
                self._advance()
                return Fraction(token.text)
            case "name":
                self._advance()
                return token.text
            case "op" if token.text == "[":
                self._advance()
                items: list[Fraction] = []
                if self._accept("]"):
                    return ()
                while True:
                    items.append(self._rational())
                    if self._accept("]"):
                        return tuple(items)
                    self._expect(",")
            case _:
                raise self.fail("unexpected token", ["number", "name", "'['"])

    def _rational(self) -> Fraction:
        token = self._peek()
        if token.kind != "num":
            raise self.fail("unexpected token", ["number"])
        self._advance()
        return Fraction(token.text)


def nat_arg(args: Sequence[Arg], index: int, what: str) -> int:
    """Read a natural-number argument, raising `ValueError` otherwise."""
    value = args[index]
    if not isinstance(value, Fraction) or value.denominator != 1 or value < 0:
        raise ValueError(f"{what} expects a natural number, got {value}")
    return int(value)
