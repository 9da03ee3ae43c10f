from __future__ import annotations

from fractions import Fraction

import pytest

from gpla.utils.parsing import TextSyntaxError, nat_arg, tokenize


class TestTokenize:
    def test_kinds_and_positions(self):
        tokens = tokenize("scl(-3/2) ; id", TextSyntaxError)
        assert [t.kind for t in tokens] == ["name", "op", "num", "op", "op", "name", "end"]
        assert tokens[2].text == "-3/2"
        assert tokens[2].pos == 4
        assert tokens[-1].pos == len("scl(-3/2) ; id")

    def test_rejects_unknown_character(self):
        with pytest.raises(TextSyntaxError) as info:
            tokenize("dup # del", TextSyntaxError)
        assert info.value.position == 4


class TestNatArg:
    def test_accepts_naturals(self):
        assert nat_arg([Fraction(3)], 0, "id") == 3

    @pytest.mark.parametrize("value", [Fraction(-1), Fraction(1, 2), "x", ()])
    def test_rejects_others(self, value):
        with pytest.raises(ValueError, match="natural number"):
            nat_arg([value], 0, "id")
