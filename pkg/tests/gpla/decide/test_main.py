from __future__ import annotations

from collections import defaultdict

import pytest

from gpla.decide import (
    Fails,
    Holds,
    counterexample_holds,
    equal,
    equal_terms,
    subset,
    subset_terms,
)
from gpla.semantics import ArityMismatch, empty_rel, evaluate, union_rel
from gpla.term import GEQ, LEQ, parse
from gpla.testkit import GridOracle, grid_compare, random_term


class TestSubset:
    def test_total(self):
        assert equal_terms(parse("codel"), parse("(zero ; leq) | (zero ; geq)")) == Holds()

    def test_counterexample(self):
        d, c = evaluate(GEQ), evaluate(LEQ)
        verdict = subset(d, c)
        assert isinstance(verdict, Fails)
        assert counterexample_holds(verdict, d, c)
        x, y = verdict.counterexample
        assert x > y

    def test_strict_containment(self):
        assert subset_terms(parse("zero"), parse("codel")) == Holds()
        match subset_terms(parse("codel"), parse("zero")):
            case Fails(counterexample=(x,)):
                assert x != 0
            case verdict:
                pytest.fail(f"unexpected {verdict}")

    def test_duplicate_cells(self):
        r = evaluate(parse("geq ; scl(2)"))
        assert equal(r, union_rel(r, r)) == Holds()

    def test_empty(self):
        assert subset(empty_rel(1, 1), evaluate(GEQ)) == Holds()
        assert isinstance(subset(evaluate(GEQ), empty_rel(1, 1)), Fails)
        assert equal(empty_rel(0, 0), evaluate(parse("one ; cozero"))) == Holds()

    def test_arity_mismatch(self):
        with pytest.raises(ArityMismatch):
            subset(evaluate(GEQ), evaluate(parse("one")))

    def test_holds_passes_recheck(self):
        assert counterexample_holds(Holds(), evaluate(GEQ), evaluate(LEQ))


class TestAgainstGrid:
    def test_random_pairs(self):
        oracle = GridOracle()
        pool = defaultdict(list)
        for seed in range(10_000, 10_400):
            t = random_term(seed)
            pool[t.arity].append(t)
        pairs = [
            (terms[i], terms[i + 1])
            for terms in pool.values()
            for i in range(len(terms) - 1)
        ][:200]
        assert len(pairs) == 200

        for t, u in pairs:
            assert t.arity.left + t.arity.right <= 3
            d, c = evaluate(t), evaluate(u)
            match subset(d, c):
                case Holds():
                    assert not grid_compare(d, c, oracle).left_only
                case Fails() as verdict:
                    assert counterexample_holds(verdict, d, c)
