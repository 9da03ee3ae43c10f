from __future__ import annotations

from .builder import (
    ADD,
    CODEL,
    CODUP,
    COADD,
    COONE,
    COZERO,
    DEL,
    DUP,
    GEQ,
    ID,
    LEQ,
    ONE,
    SWAP,
    ZERO,
    Fragment,
    cap,
    coscl,
    cup,
    dual,
    dual_via_cups,
    effect,
    fragment,
    gen,
    par,
    scl,
    seq,
    sym,
    union,
    wiring,
)
from .exceptions import ParseError, TermError, TermTypeError
from .parser import MACROS, parse, print_term, register_macro
from .schema import (
    SCALAR_TAGS,
    Arity,
    Gen,
    Generator,
    GenTag,
    Id,
    Par,
    Seq,
    Swap,
    Term,
    Union,
    arity,
)

__all__ = [
    "ADD",
    "CODEL",
    "CODUP",
    "COADD",
    "COONE",
    "COZERO",
    "DEL",
    "DUP",
    "GEQ",
    "ID",
    "LEQ",
    "MACROS",
    "ONE",
    "SCALAR_TAGS",
    "SWAP",
    "ZERO",
    "Arity",
    "Fragment",
    "Gen",
    "GenTag",
    "Generator",
    "Id",
    "Par",
    "ParseError",
    "Seq",
    "Swap",
    "Term",
    "TermError",
    "TermTypeError",
    "Union",
    "arity",
    "cap",
    "coscl",
    "cup",
    "dual",
    "dual_via_cups",
    "effect",
    "fragment",
    "gen",
    "par",
    "parse",
    "print_term",
    "register_macro",
    "scl",
    "seq",
    "sym",
    "union",
    "wiring",
]
