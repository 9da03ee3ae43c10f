from __future__ import annotations

from fractions import Fraction

import pytest

from gpla.term import (
    ADD,
    DEL,
    DUP,
    GEQ,
    ID,
    LEQ,
    SWAP,
    ZERO,
    Arity,
    Id,
    Par,
    ParseError,
    Seq,
    TermTypeError,
    Union,
    cup,
    parse,
    print_term,
    scl,
)
from gpla.testkit import random_term


class TestParse:
    def test_precedence(self):
        assert parse("dup ; del & id") == Seq(DUP, Par(DEL, ID))
        assert parse("geq ; leq | id") == Union(Seq(GEQ, LEQ), ID)

    def test_nesting(self):
        assert parse("geq ; geq ; leq") == Seq(Seq(GEQ, GEQ), LEQ)
        assert parse("geq | leq | id") == Union(GEQ, Union(LEQ, ID))
        assert parse("id & id & id") == Par(Par(ID, ID), ID)

    def test_atoms(self):
        assert parse("scl(-3/2)") == scl(Fraction(-3, 2))
        assert parse("id(0)") == Id(0)
        assert parse("sw") == SWAP
        assert parse("cup(1)") == cup(1)
        assert parse("  (add)  ") == ADD
        assert parse("zero") == ZERO

    def test_macros(self):
        assert parse("relu").arity == Arity(1, 1)
        assert parse("max").arity == Arity(2, 1)
        assert parse("mat(2, 3, [1, 2, 3, 4, 5, 6])").arity == Arity(3, 2)
        assert parse("aff(1, 1, [2], [1])").arity == Arity(1, 1)
        assert parse("union(2)").arity == Arity(4, 2)

    def test_unknown_atom(self):
        with pytest.raises(ParseError) as info:
            parse("dup ; frob")
        assert info.value.position == 6
        assert "dup" in info.value.expected

    def test_bad_arguments(self):
        with pytest.raises(ParseError, match="invalid atom 'id'"):
            parse("id(1/2)")
        with pytest.raises(ParseError):
            parse("scl")
        with pytest.raises(ParseError):
            parse("dup(1)")

    def test_unbalanced(self):
        with pytest.raises(ParseError) as info:
            parse("(dup ; add")
        assert info.value.position == len("(dup ; add")

    def test_trailing_operator(self):
        with pytest.raises(ParseError):
            parse("dup ;")

    def test_ill_typed(self):
        with pytest.raises(TermTypeError):
            parse("dup ; dup")
        with pytest.raises(TermTypeError):
            parse("dup | add")

    def test_parse_error_is_a_value_error(self):
        with pytest.raises(ValueError):
            parse("@")


class TestPrintTerm:
    def test_format(self):
        assert print_term(Seq(DUP, Par(DEL, ID))) == "(dup ; (del & id))"
        assert print_term(Union(GEQ, LEQ)) == "(geq | leq)"
        assert print_term(Id(3)) == "id(3)"
        assert print_term(scl(Fraction(-1, 2))) == "scl(-1/2)"

    def test_parse_inverts_print(self):
        for seed in range(50):
            t = random_term(seed)
            assert parse(print_term(t)) == t
