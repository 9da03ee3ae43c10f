from __future__ import annotations

from collections.abc import Sequence
from enum import StrEnum
from fractions import Fraction

from attrs import field, frozen

from gpla.polyhedron import Constraint, LinExpr, Polyhedron, Rel
from gpla.polyhedron.schema import leading_positive, primitive
from gpla.semantics import PLRelation
from gpla.term import Arity

from .exceptions import InternalError, ZeroHyperplane


@frozen
class Hyperplane:
    """
    A nonzero affine form `H(x) = a·x + b`, stored so that `H` and `-H` coincide.

    Coefficients are coprime integers with the first nonzero one positive;
    sign conditions are read relative to this stored orientation.
    """

    expr: LinExpr

    @classmethod
    def of(cls, expr: LinExpr) -> Hyperplane:
        if expr.is_constant:
            if expr.const == 0:
                raise ZeroHyperplane("the zero map is not a hyperplane")
            return cls(LinExpr.constant(expr.dim, 1))
        expr = primitive(expr)
        return cls(expr if leading_positive(expr.coeffs) else -expr)

    @property
    def dim(self) -> int:
        return self.expr.dim

    def __call__(self, x: Sequence[Fraction]) -> Fraction:
        return self.expr(x)

    def __str__(self) -> str:
        return str(self.expr)


class Sign(StrEnum):
    ZERO = "0"
    NONNEG = "+"
    NONPOS = "-"

    def constraint(self, h: Hyperplane) -> Constraint | None:
        match self:
            case Sign.ZERO:
                return Constraint.of(h.expr, Rel.EQ)
            case Sign.NONNEG:
                return Constraint.of(h.expr, Rel.GE)
            case Sign.NONPOS:
                return Constraint.of(-h.expr, Rel.GE)

    def implies(self, other: Sign) -> bool:
        """Containment of the sign conditions: `0` lies inside both half-spaces."""
        return self is Sign.ZERO or self is other

    def meet(self, other: Sign) -> Sign:
        return self if self is other else Sign.ZERO


type Valuation = tuple[Sign, ...]


@frozen
class Cell:
    valuation: Valuation = field(converter=tuple)

    def __len__(self) -> int:
        return len(self.valuation)


def render_sign_string(cell: Cell) -> str:
    return "".join(s.value for s in cell.valuation)


@frozen
class PLNormalForm:
    """A union of cells, each a sign valuation over one shared hyperplane list."""

    arity: Arity
    hyperplanes: tuple[Hyperplane, ...] = field(converter=tuple)
    cells: tuple[Cell, ...] = field(converter=tuple)

    def __attrs_post_init__(self) -> None:
        for h in self.hyperplanes:
            if h.dim != self.dim:
                raise InternalError(f"hyperplane {h} outside dimension {self.dim}")
        for c in self.cells:
            if len(c) != len(self.hyperplanes):
                raise InternalError(
                    f"valuation {render_sign_string(c)} over {len(self.hyperplanes)} hyperplanes"
                )

    @property
    def dim(self) -> int:
        return self.arity.left + self.arity.right

    def cell_polyhedron(self, c: Cell) -> Polyhedron:
        rows = [s.constraint(h) for s, h in zip(c.valuation, self.hyperplanes, strict=True)]
        return Polyhedron.of(self.dim, rows)

    def to_relation(self) -> PLRelation:
        return PLRelation(self.arity, tuple(self.cell_polyhedron(c) for c in self.cells))

    def reordered(self, hyperplanes: Sequence[Hyperplane]) -> PLNormalForm:
        """The same normal form over a permutation of its hyperplane list."""
        index = {h: i for i, h in enumerate(self.hyperplanes)}
        if set(index) != set(hyperplanes) or len(index) != len(hyperplanes):
            raise InternalError("reordering must use exactly the same hyperplanes")
        order = [index[h] for h in hyperplanes]
        cells = [Cell(tuple(c.valuation[i] for i in order)) for c in self.cells]
        return PLNormalForm(self.arity, tuple(hyperplanes), tuple(cells))

    def render(self) -> str:
        lines = [f"arity {self.arity}"]
        lines += [f"  H{i}: {h}" for i, h in enumerate(self.hyperplanes)]
        lines += [f"  cell {render_sign_string(c) or '()'}" for c in self.cells]
        return "\n".join(lines)


def cell_polyhedron(nf: PLNormalForm, c: Cell) -> Polyhedron:
    return nf.cell_polyhedron(c)
