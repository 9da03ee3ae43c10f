from __future__ import annotations

from enum import StrEnum
from fractions import Fraction
from typing import Literal

from attrs import field, frozen

from gpla.polyhedron.schema import as_fractions
from gpla.term import Term, TermTypeError


class AxiomKind(StrEnum):
    EQ = "eq"
    LEQ = "leq"


class ScalarCondition(StrEnum):
    NONE = "none"
    NONZERO = "nonzero"
    POSITIVE = "positive"
    NEGATIVE = "negative"

    def admits(self, r: Fraction) -> bool:
        match self:
            case ScalarCondition.NONE:
                return True
            case ScalarCondition.NONZERO:
                return r != 0
            case ScalarCondition.POSITIVE:
                return r > 0
            case ScalarCondition.NEGATIVE:
                return r < 0


type Outcome = Literal["holds", "fails"]


@frozen
class Axiom:
    """One instance of a law: `lhs = rhs` or `lhs ⊆ rhs`."""

    name: str
    lhs: Term
    rhs: Term
    kind: AxiomKind = AxiomKind.EQ
    scalar_condition: ScalarCondition = ScalarCondition.NONE

    scalars: tuple[Fraction, ...] = field(default=(), converter=as_fractions)
    """Scalar values this instance was taken at, if the law is a family."""

    expected: Outcome = "holds"
    """Negative controls expect `fails`."""

    variant: str | None = None
    """Tells apart laws that share a name, such as a law and its mirror image."""

    def __attrs_post_init__(self) -> None:
        if self.lhs.arity != self.rhs.arity:
            raise TermTypeError(
                f"axiom {self.name}: sides {self.lhs.arity} and {self.rhs.arity}",
                (self.lhs, self.rhs),
            )

    @property
    def label(self) -> str:
        name = f"{self.name} ({self.variant})" if self.variant else self.name
        if not self.scalars:
            return name
        return f"{name}[{', '.join(str(r) for r in self.scalars)}]"
