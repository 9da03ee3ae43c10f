from __future__ import annotations

from fractions import Fraction
from typing import Literal, Self

from pydantic import BaseModel, field_validator

from gpla.polyhedron import Constraint, LinExpr, Polyhedron, Rel

from .schema import PLRelation


def _check_rational(value: str) -> str:
    Fraction(value)
    return value


class ConstraintDocument(BaseModel):
    coeffs: list[str]
    const: str
    rel: Literal["ge", "eq"]

    @field_validator("coeffs")
    @classmethod
    def _coeffs_are_rational(cls, value: list[str]) -> list[str]:
        return [_check_rational(v) for v in value]

    @field_validator("const")
    @classmethod
    def _const_is_rational(cls, value: str) -> str:
        return _check_rational(value)

    @classmethod
    def from_constraint(cls, c: Constraint) -> Self:
        return cls(
            coeffs=[str(a) for a in c.expr.coeffs],
            const=str(c.expr.const),
            rel=c.rel.value,
        )

    def to_constraint(self) -> Constraint | None:
        expr = LinExpr([Fraction(a) for a in self.coeffs], Fraction(self.const))
        return Constraint.of(expr, Rel(self.rel))


class RelationDocument(BaseModel):
    """Serialized relation; rationals are written as `p/q` strings."""

    left: int
    right: int
    polyhedra: list[list[ConstraintDocument]]

    @classmethod
    def from_relation(cls, r: PLRelation) -> Self:
        return cls(
            left=r.arity.left,
            right=r.arity.right,
            polyhedra=[
                [ConstraintDocument.from_constraint(c) for c in p.constraints]
                for p in r.polys
            ],
        )

    def to_relation(self) -> PLRelation:
        dim = self.left + self.right
        cells = [
            Polyhedron.of(dim, [c.to_constraint() for c in cell])
            for cell in self.polyhedra
        ]
        return PLRelation.of(self.left, self.right, cells)
