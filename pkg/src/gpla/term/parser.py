from __future__ import annotations

from collections.abc import Callable, Sequence
from fractions import Fraction
from typing import ClassVar, override

from attrs import define

from gpla.utils.parsing import Arg, DescentParser, TextSyntaxError, Token, nat_arg

from .builder import cap, cup, gen
from .exceptions import ParseError, TermError
from .schema import SCALAR_TAGS, Gen, GenTag, Id, Par, Seq, Swap, Term, Union

type Macro = Callable[..., Term]
type MacroRegistry = dict[str, Macro]

MACROS: MacroRegistry = {}
"""Named term builders usable as atoms; expanded while parsing."""


def register_macro[F: Macro](name: str) -> Callable[[F], F]:
    def decorator(func: F) -> F:
        MACROS[name] = func
        return func

    return decorator


_PLAIN_GENERATORS = {tag.value: tag for tag in GenTag if tag not in SCALAR_TAGS}
_BUILTIN_NAMES = ("id", "sw", "scl", "coscl", "cup", "cap")


@define
class TermParser(DescentParser[Term]):
    error_type: ClassVar[type[TextSyntaxError]] = ParseError

    @override
    def atom_names(self) -> Sequence[str]:
        return sorted([*_PLAIN_GENERATORS, *_BUILTIN_NAMES, *MACROS])

    @override
    def named_atom(self, name: str, args: list[Arg] | None, token: Token) -> Term:
        try:
            return self._build(name, args or [], token, has_args=args is not None)
        except (TermError, TypeError, ValueError, IndexError) as e:
            if isinstance(e, ParseError):
                raise
            raise ParseError(f"invalid atom {name!r}: {e}", token.pos, ()) from e

    def _build(
        self, name: str, args: list[Arg], token: Token, *, has_args: bool
    ) -> Term:
        if name in _PLAIN_GENERATORS:
            if has_args:
                raise ValueError("takes no arguments")
            return gen(_PLAIN_GENERATORS[name])

        match name:
            case "scl" | "coscl":
                if len(args) != 1 or not isinstance(args[0], Fraction):
                    raise ValueError("expects one rational")
                return gen(GenTag(name), args[0])
            case "id":
                return Id(nat_arg(args, 0, "id") if has_args else 1)
            case "sw":
                if has_args:
                    raise ValueError("takes no arguments")
                return Swap()
            case "cup":
                return cup(nat_arg(args, 0, "cup"))
            case "cap":
                return cap(nat_arg(args, 0, "cap"))
            case _ if name in MACROS:
                return MACROS[name](*args)
            case _:
                raise ParseError(
                    f"unknown atom {name!r}", token.pos, self.atom_names()
                )

    @override
    def make_seq(self, left: Term, right: Term) -> Term:
        return Seq(left, right)

    @override
    def make_par(self, left: Term, right: Term) -> Term:
        return Par(left, right)

    @override
    def make_union(self, left: Term, right: Term) -> Term:
        return Union(left, right)


def parse(text: str) -> Term:
    """
    Parse term text.

    Raises `ParseError` on malformed text and `TermTypeError` when operands
    are well-formed but their arities do not fit.
    """
    return TermParser(text).parse()


def print_term(t: Term) -> str:
    """Fully parenthesized canonical text; `parse(print_term(t)) == t`."""
    match t:
        case Gen(generator=g):
            return str(g)
        case Id(n=1):
            return "id"
        case Id(n=n):
            return f"id({n})"
        case Swap():
            return "sw"
        case Seq(first=a, second=b):
            return f"({print_term(a)} ; {print_term(b)})"
        case Par(top=a, bottom=b):
            return f"({print_term(a)} & {print_term(b)})"
        case Union(first=a, second=b):
            return f"({print_term(a)} | {print_term(b)})"
