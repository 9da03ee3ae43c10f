from __future__ import annotations

from fractions import Fraction

import pytest

from gpla.decide import Fails, Holds
from gpla.polyhedron import Polyhedron
from gpla.semantics import ArityMismatch, PLRelation, evaluate
from gpla.term import GEQ, Arity, Gen, Par, Seq, Term, Union, parse
from gpla.testkit import (
    DEFAULT_RADIUS,
    DEFAULT_STEP,
    GridOracle,
    check_chain,
    grid_compare,
    random_polyhedron,
    random_term,
)

F = Fraction


def _count(t: Term) -> tuple[int, int]:
    """Generators and unions in `t`."""
    match t:
        case Gen():
            return 1, 0
        case Seq(first=a, second=b) | Par(top=a, bottom=b):
            (ga, ua), (gb, ub) = _count(a), _count(b)
            return ga + gb, ua + ub
        case Union(first=a, second=b):
            (ga, ua), (gb, ub) = _count(a), _count(b)
            return ga + gb, ua + ub + 1
    return 0, 0


class TestRandomTerm:
    def test_deterministic(self):
        assert random_term(7) == random_term(7)
        assert any(random_term(s) != random_term(0) for s in range(1, 5))

    @pytest.mark.parametrize("seed", range(40))
    def test_bounds(self, seed):
        t = random_term(seed, max_gens=6, max_arity=3, max_unions=2)
        assert t.arity.left + t.arity.right <= 3
        gens, unions = _count(t)
        assert unions <= 2
        assert gens <= 6

    def test_no_unions(self):
        for seed in range(20):
            assert _count(random_term(seed, max_unions=0))[1] == 0

    def test_negative_bounds(self):
        with pytest.raises(ValueError):
            random_term(0, max_gens=-1)


class TestRandomPolyhedron:
    def test_deterministic(self):
        assert random_polyhedron(3, dim=2) == random_polyhedron(3, dim=2)
        assert random_polyhedron(3, dim=4).dim == 4


class TestGridOracle:
    def test_defaults(self):
        oracle = GridOracle()
        assert oracle.radius == DEFAULT_RADIUS
        assert oracle.step == DEFAULT_STEP

    def test_axis(self):
        assert GridOracle(radius=1, step=F(1, 2)).axis() == [F(-1), F(-1, 2), F(0), F(1, 2), F(1)]
        assert len(list(GridOracle(radius=1, step=1).points(2))) == 9

    def test_validation(self):
        with pytest.raises(ValueError):
            GridOracle(radius=-1)
        with pytest.raises(ValueError):
            GridOracle(step=0)


class TestGridCompare:
    def test_left_only_points(self):
        r = PLRelation(Arity(0, 1), (Polyhedron.build(1, ge=[[1, 1]]),))
        s = PLRelation(Arity(0, 1), (Polyhedron.build(1, ge=[[1, 0]]),))
        report = grid_compare(r, s, GridOracle(radius=1, step=F(1, 2)))
        assert report.left_only == ((F(-1),), (F(-1, 2),))
        assert report.right_only == ()
        assert report.both == 3
        assert report.neither == 0
        assert not report.agree

    def test_agreement(self):
        assert grid_compare(evaluate(parse("geq ; geq")), evaluate(GEQ)).agree

    def test_arity_mismatch(self):
        with pytest.raises(ArityMismatch):
            grid_compare(evaluate(GEQ), evaluate(parse("one")))


class TestCheckChain:
    def test_steps(self):
        verdicts = check_chain([parse("geq ; geq"), GEQ, parse("leq")])
        assert verdicts[0] == Holds()
        assert isinstance(verdicts[1], Fails)

    def test_short_chains(self):
        assert check_chain([GEQ]) == []
