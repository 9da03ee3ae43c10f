from __future__ import annotations

from enum import StrEnum
from fractions import Fraction
from typing import Final, NamedTuple

from attrs import field, frozen, validators

from .exceptions import TermTypeError


class Arity(NamedTuple):
    left: int
    """Number of left ports."""

    right: int
    """Number of right ports."""

    def reversed(self) -> Arity:
        return Arity(self.right, self.left)

    def __str__(self) -> str:
        return f"{self.left}→{self.right}"


class GenTag(StrEnum):
    DUP = "dup"
    DEL = "del"
    CODUP = "codup"
    CODEL = "codel"
    ADD = "add"
    ZERO = "zero"
    COADD = "coadd"
    COZERO = "cozero"
    ONE = "one"
    COONE = "coone"
    GEQ = "geq"
    LEQ = "leq"
    SCALAR = "scl"
    COSCALAR = "coscl"


GEN_ARITY: Final[dict[GenTag, Arity]] = {
    GenTag.DUP: Arity(1, 2),
    GenTag.DEL: Arity(1, 0),
    GenTag.CODUP: Arity(2, 1),
    GenTag.CODEL: Arity(0, 1),
    GenTag.ADD: Arity(2, 1),
    GenTag.ZERO: Arity(0, 1),
    GenTag.COADD: Arity(1, 2),
    GenTag.COZERO: Arity(1, 0),
    GenTag.ONE: Arity(0, 1),
    GenTag.COONE: Arity(1, 0),
    GenTag.GEQ: Arity(1, 1),
    GenTag.LEQ: Arity(1, 1),
    GenTag.SCALAR: Arity(1, 1),
    GenTag.COSCALAR: Arity(1, 1),
}

MIRROR: Final[dict[GenTag, GenTag]] = {
    GenTag.DUP: GenTag.CODUP,
    GenTag.CODUP: GenTag.DUP,
    GenTag.DEL: GenTag.CODEL,
    GenTag.CODEL: GenTag.DEL,
    GenTag.ADD: GenTag.COADD,
    GenTag.COADD: GenTag.ADD,
    GenTag.ZERO: GenTag.COZERO,
    GenTag.COZERO: GenTag.ZERO,
    GenTag.ONE: GenTag.COONE,
    GenTag.COONE: GenTag.ONE,
    GenTag.GEQ: GenTag.LEQ,
    GenTag.LEQ: GenTag.GEQ,
    GenTag.SCALAR: GenTag.COSCALAR,
    GenTag.COSCALAR: GenTag.SCALAR,
}

SCALAR_TAGS: Final = frozenset({GenTag.SCALAR, GenTag.COSCALAR})


def _optional_fraction(value: Fraction | int | str | None) -> Fraction | None:
    return None if value is None else Fraction(value)


@frozen
class Generator:
    tag: GenTag
    scalar: Fraction | None = field(default=None, converter=_optional_fraction)
    """Only set for `scl` and `coscl`."""

    def __attrs_post_init__(self) -> None:
        if (self.tag in SCALAR_TAGS) != (self.scalar is not None):
            raise ValueError(f"generator {self.tag} scalar mismatch: {self.scalar}")

    @property
    def arity(self) -> Arity:
        return GEN_ARITY[self.tag]

    def mirror(self) -> Generator:
        return Generator(MIRROR[self.tag], self.scalar)

    def __str__(self) -> str:
        if self.scalar is not None:
            return f"{self.tag}({self.scalar})"
        return str(self.tag)


# Each node caches its arity at construction; construction is where ill-typed
# operands are rejected.


@frozen
class Gen:
    generator: Generator
    arity: Arity = field(init=False, eq=False, repr=False)

    def __attrs_post_init__(self) -> None:
        object.__setattr__(self, "arity", self.generator.arity)


@frozen
class Id:
    n: int = field(default=1, validator=validators.ge(0))
    arity: Arity = field(init=False, eq=False, repr=False)

    def __attrs_post_init__(self) -> None:
        object.__setattr__(self, "arity", Arity(self.n, self.n))


@frozen
class Swap:
    arity: Arity = field(init=False, eq=False, repr=False)

    def __attrs_post_init__(self) -> None:
        object.__setattr__(self, "arity", Arity(2, 2))


@frozen
class Seq:
    first: Term
    second: Term
    arity: Arity = field(init=False, eq=False, repr=False)

    def __attrs_post_init__(self) -> None:
        if self.first.arity.right != self.second.arity.left:
            raise TermTypeError(
                f"cannot compose {self.first.arity} with {self.second.arity}",
                (self.first, self.second),
            )
        arity = Arity(self.first.arity.left, self.second.arity.right)
        object.__setattr__(self, "arity", arity)


@frozen
class Par:
    top: Term
    bottom: Term
    arity: Arity = field(init=False, eq=False, repr=False)

    def __attrs_post_init__(self) -> None:
        arity = Arity(
            self.top.arity.left + self.bottom.arity.left,
            self.top.arity.right + self.bottom.arity.right,
        )
        object.__setattr__(self, "arity", arity)


@frozen
class Union:
    first: Term
    second: Term
    arity: Arity = field(init=False, eq=False, repr=False)

    def __attrs_post_init__(self) -> None:
        if self.first.arity != self.second.arity:
            raise TermTypeError(
                f"cannot join {self.first.arity} with {self.second.arity}",
                (self.first, self.second),
            )
        object.__setattr__(self, "arity", self.first.arity)


type Term = Gen | Id | Swap | Seq | Par | Union


def arity(t: Term) -> Arity:
    """The arity of a well-formed term, fixed when it was constructed."""
    return t.arity
