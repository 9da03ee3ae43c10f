from __future__ import annotations

from fractions import Fraction

import pytest

from gpla.axioms import (
    Axiom,
    AxiomKind,
    ScalarCondition,
    all_axioms,
    check_axiom,
    derived_laws,
    negative_controls,
)
from gpla.decide import Fails, Holds
from gpla.term import DUP, GEQ, ID, TermTypeError


class TestScalarCondition:
    def test_admits(self):
        assert ScalarCondition.NONE.admits(Fraction(0))
        assert not ScalarCondition.NONZERO.admits(Fraction(0))
        assert ScalarCondition.POSITIVE.admits(Fraction(1, 2))
        assert not ScalarCondition.POSITIVE.admits(Fraction(-1))
        assert ScalarCondition.NEGATIVE.admits(Fraction(-3, 5))


class TestAxiom:
    def test_sides_must_agree(self):
        with pytest.raises(TermTypeError):
            Axiom("bad", DUP, ID)

    def test_label(self):
        assert Axiom("≤del", GEQ, GEQ).label == "≤del"
        axiom = Axiom("×", GEQ, GEQ, scalars=(2, Fraction(-1, 2)))
        assert axiom.label == "×[2, -1/2]"

    def test_label_with_variant(self):
        axiom = Axiom("●-coas", GEQ, GEQ, variant="mirrored")
        assert axiom.label == "●-coas (mirrored)"
        assert Axiom("×", GEQ, GEQ, scalars=(2,), variant="mirrored").label == "× (mirrored)[2]"


class TestCatalog:
    def test_size(self):
        assert len(all_axioms()) > 50

    def test_side_conditions_filter_samples(self):
        names = [(a.name, a.scalars) for a in all_axioms()]
        assert ("r-inv", (Fraction(0),)) not in names
        assert ("r-inv", (Fraction(2),)) in names
        assert ("≤r+", (Fraction(-1),)) not in names
        assert ("≤r-", (Fraction(-1),)) in names

    def test_samples_deduplicated(self):
        assert len(all_axioms([2, 2])) == len(all_axioms([2]))

    def test_needs_samples(self):
        with pytest.raises(ValueError):
            all_axioms([])

    def test_figure_names(self):
        axioms = all_axioms([2])
        names = [a.name for a in axioms]
        for name in ("●-as", "●-co", "●-unl", "○-coas", "○-coco", "○-counl"):
            assert name in names
        assert "○-as" not in names
        assert not any(name.endswith("-op") for name in names)

        copies = [a for a in axioms if a.name == "●-coas"]
        assert [a.variant for a in copies] == [None, "mirrored"]
        assert copies[0].lhs != copies[1].lhs

    def test_labels_unique(self):
        labels = [a.label for a in all_axioms()]
        assert len(labels) == len(set(labels))

    @pytest.mark.parametrize("axiom", all_axioms(), ids=lambda a: a.label)
    def test_holds(self, axiom):
        assert check_axiom(axiom) == Holds()

    @pytest.mark.parametrize("axiom", negative_controls(), ids=lambda a: a.label)
    def test_negative_controls_fail(self, axiom):
        assert axiom.expected == "fails"
        assert isinstance(check_axiom(axiom), Fails)

    def test_order_laws_are_inclusions(self):
        for axiom in all_axioms():
            if axiom.name in ("○⊆●", "≤dup", "≤zero", "antisym"):
                assert axiom.kind is AxiomKind.LEQ


class TestDerivedLaws:
    @pytest.mark.parametrize("axiom", derived_laws(), ids=lambda a: a.label)
    def test_outcome(self, axiom):
        match check_axiom(axiom):
            case Holds():
                assert axiom.expected == "holds"
            case Fails():
                assert axiom.expected == "fails"

    def test_mirrored_orders_present(self):
        names = {a.name for a in derived_laws()}
        assert "order: geq ≤ leq" in names
        assert "op order: geq ≤ leq" in names
        assert "effect order: geq ≤ leq" in names
