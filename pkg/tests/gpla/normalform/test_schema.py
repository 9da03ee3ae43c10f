from __future__ import annotations

from fractions import Fraction

import pytest

from gpla.normalform import (
    Cell,
    Hyperplane,
    InternalError,
    NormalFormError,
    PLNormalForm,
    Sign,
    ZeroHyperplane,
    cell_polyhedron,
    render_sign_string,
)
from gpla.polyhedron import LinExpr, Polyhedron
from gpla.term import Arity

X = Hyperplane.of(LinExpr([1], 0))


class TestHyperplane:
    def test_normalizes_orientation(self):
        h = Hyperplane.of(LinExpr([-2, 4], 6))
        assert h.expr == LinExpr([1, -2], -3)
        assert h == Hyperplane.of(LinExpr([1, -2], -3))

    def test_opposites_coincide(self):
        e = LinExpr([Fraction(1, 2), -1], 1)
        assert Hyperplane.of(e) == Hyperplane.of(-e)

    def test_evaluates(self):
        h = Hyperplane.of(LinExpr([1, -1], 2))
        assert h((Fraction(1), Fraction(5))) == -2
        assert h.dim == 2

    def test_zero_map(self):
        with pytest.raises(ZeroHyperplane):
            Hyperplane.of(LinExpr([0, 0], 0))
        assert issubclass(ZeroHyperplane, NormalFormError)

    def test_constant_map(self):
        assert Hyperplane.of(LinExpr([0], -5)).expr == LinExpr([0], 1)


class TestSign:
    def test_containment(self):
        assert Sign.ZERO.implies(Sign.NONNEG)
        assert Sign.ZERO.implies(Sign.NONPOS)
        assert Sign.NONNEG.implies(Sign.NONNEG)
        assert not Sign.NONNEG.implies(Sign.NONPOS)
        assert not Sign.NONPOS.implies(Sign.ZERO)

    def test_meet(self):
        assert Sign.NONNEG.meet(Sign.NONNEG) is Sign.NONNEG
        assert Sign.NONNEG.meet(Sign.NONPOS) is Sign.ZERO
        assert Sign.ZERO.meet(Sign.NONPOS) is Sign.ZERO


class TestCellPolyhedron:
    @pytest.mark.parametrize(
        ("sign", "expected"),
        [
            (Sign.ZERO, Polyhedron.build(1, eq=[[1, 0]])),
            (Sign.NONNEG, Polyhedron.build(1, ge=[[1, 0]])),
            (Sign.NONPOS, Polyhedron.build(1, ge=[[-1, 0]])),
        ],
    )
    def test_singletons(self, sign, expected):
        nf = PLNormalForm(Arity(0, 1), [X], [Cell([sign])])
        assert cell_polyhedron(nf, nf.cells[0]) == expected

    def test_to_relation(self):
        nf = PLNormalForm(Arity(0, 1), [X], [Cell([Sign.NONNEG]), Cell([Sign.NONPOS])])
        r = nf.to_relation()
        assert r.arity == Arity(0, 1)
        assert len(r) == 2


class TestPLNormalForm:
    def test_valuation_length_checked(self):
        with pytest.raises(InternalError):
            PLNormalForm(Arity(0, 1), [X], [Cell([])])

    def test_hyperplane_dimension_checked(self):
        with pytest.raises(InternalError):
            PLNormalForm(Arity(1, 1), [X], [])

    def test_reordered(self):
        y = Hyperplane.of(LinExpr([0, 1], 0))
        x = Hyperplane.of(LinExpr([1, 0], 0))
        nf = PLNormalForm(Arity(1, 1), [x, y], [Cell([Sign.ZERO, Sign.NONNEG])])
        moved = nf.reordered([y, x])
        assert moved.hyperplanes == (y, x)
        assert moved.cells == (Cell([Sign.NONNEG, Sign.ZERO]),)
        with pytest.raises(InternalError):
            nf.reordered([x])

    def test_render(self):
        cell = Cell([Sign.ZERO, Sign.NONNEG, Sign.NONPOS])
        assert render_sign_string(cell) == "0+-"
        nf = PLNormalForm(Arity(0, 1), [X], [Cell([Sign.NONNEG])])
        assert nf.render().splitlines()[-1] == "  cell +"
