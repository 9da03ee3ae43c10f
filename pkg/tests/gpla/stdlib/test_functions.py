from __future__ import annotations

from fractions import Fraction

import pytest

from gpla.decide import Holds, equal_terms
from gpla.semantics import evaluate, member
from gpla.stdlib import (
    LayerMismatch,
    Matrix,
    abs_term,
    max_term,
    relu_network,
    relu_term,
)
from gpla.term import Arity, Id, parse

F = Fraction


class TestFunctions:
    @pytest.mark.parametrize(("x", "y"), [(1, 2), (3, -1), (F(-1, 2), F(-1, 2))])
    def test_max(self, x, y):
        r = evaluate(max_term())
        assert r.arity == Arity(2, 1)
        assert member((F(x), F(y), F(max(x, y))), r)
        assert not member((F(x), F(y), F(min(x, y)) - 1), r)

    @pytest.mark.parametrize("x", [-2, 0, F(3, 2)])
    def test_relu_and_abs(self, x):
        assert member((F(x), F(max(x, 0))), evaluate(relu_term()))
        assert member((F(x), F(abs(x))), evaluate(abs_term()))
        assert not member((F(x), F(-1)), evaluate(abs_term()))

    def test_relu_is_a_function(self):
        assert not member((F(-2), F(-2)), evaluate(relu_term()))

    def test_macros(self):
        assert parse("relu") == relu_term()
        assert parse("max") == max_term()


class TestReluNetwork:
    def test_abs_network(self):
        network = relu_network(
            [
                (Matrix.of([[1], [-1]]), [0, 0]),
                (Matrix.of([[1, 1]]), [0]),
            ]
        )
        assert network.arity == Arity(1, 1)
        assert equal_terms(network, abs_term()) == Holds()

    def test_biased_layer(self):
        # relu(2x - 1)
        network = relu_network([(Matrix.of([[2]]), [-1])])
        r = evaluate(network)
        assert member((F(1), F(1)), r)
        assert member((F(0), F(0)), r)
        assert not member((F(0), F(-1)), r)

    def test_empty(self):
        assert relu_network([], inputs=3) == Id(3)

    def test_layer_mismatch(self):
        with pytest.raises(LayerMismatch):
            relu_network(
                [
                    (Matrix.of([[1], [1]]), [0, 0]),
                    (Matrix.of([[1, 1, 1]]), [0]),
                ]
            )
