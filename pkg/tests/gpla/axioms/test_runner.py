from __future__ import annotations

import pytest

from gpla.axioms import (
    Axiom,
    AxiomKind,
    AxiomSuite,
    CheckRow,
    SuiteReport,
    check_derived_laws,
    negative_controls,
)
from gpla.decide import Fails, Holds
from gpla.term import CODEL, GEQ, LEQ, ZERO


@pytest.fixture
def anyio_backend():
    return "asyncio"


class TestCheckRow:
    def test_from_holds(self):
        row = CheckRow.from_verdict(Axiom("○⊆●", ZERO, CODEL, AxiomKind.LEQ), Holds())
        assert row.observed == "holds"
        assert row.counterexample is None
        assert row.ok

    def test_keeps_variant(self):
        row = CheckRow.from_verdict(Axiom("●-coco", GEQ, GEQ, variant="mirrored"), Holds())
        assert row.name == "●-coco"
        assert row.variant == "mirrored"

    def test_from_fails(self):
        axiom = Axiom("geq is leq", GEQ, LEQ)
        row = CheckRow.from_verdict(axiom, Fails((1, 0)))
        assert row.observed == "fails"
        assert row.counterexample == ["1", "0"]
        assert not row.ok

    def test_report(self):
        good = CheckRow(name="a", kind=AxiomKind.EQ, expected="holds", observed="holds")
        bad = CheckRow(name="b", kind=AxiomKind.EQ, expected="fails", observed="holds")
        report = SuiteReport(rows=[good, bad])
        assert report.failures == [bad]
        assert not report.ok
        assert SuiteReport().ok


class TestAxiomSuite:
    @pytest.mark.anyio
    async def test_keeps_catalog_order(self):
        axioms = [
            Axiom("○⊆●", ZERO, CODEL, AxiomKind.LEQ),
            *negative_controls(),
            Axiom("geq", GEQ, GEQ),
        ]
        report = await AxiomSuite(axioms, concurrency=2).run()
        assert [row.name for row in report.rows] == [a.name for a in axioms]
        assert report.ok

    @pytest.mark.anyio
    async def test_unexpected_rows(self):
        report = await AxiomSuite([Axiom("geq is leq", GEQ, LEQ)]).run()
        (row,) = report.failures
        assert row.expected == "holds"
        assert row.observed == "fails"

    def test_concurrency_checked(self):
        with pytest.raises(ValueError):
            AxiomSuite([], concurrency=0)


class TestDerivedSuite:
    def test_all_as_expected(self):
        assert check_derived_laws(concurrency=4).ok
