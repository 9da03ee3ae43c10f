from __future__ import annotations

from .parsing import Arg, DescentParser, TextSyntaxError, Token, nat_arg, tokenize
from .sync import with_limiter

__all__ = [
    "Arg",
    "DescentParser",
    "TextSyntaxError",
    "Token",
    "nat_arg",
    "tokenize",
    "with_limiter",
]
