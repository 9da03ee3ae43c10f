from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction

from gpla.term import ADD, COZERO, DUP, GEQ, ID, LEQ, ZERO, Id, Term, cap, cup, par, scl, seq, union

from .exceptions import LayerMismatch
from .linear import affine_term
from .schema import Matrix

type Layer = tuple[Matrix, Sequence[Fraction | int]]


def _check(order: Term) -> Term:
    """`2 → 0`, holding when `order` relates the first input to the second."""
    return seq(par(order, ID), cup(1))


def max_term() -> Term:
    """`2 → 1`, the larger of two values."""
    return union(
        seq(par(DUP, ID), par(ID, _check(GEQ))),
        seq(par(ID, DUP), par(_check(LEQ), ID)),
    )


def abs_term() -> Term:
    return seq(DUP, par(ID, scl(-1)), max_term())


def relu_term() -> Term:
    return seq(par(ID, ZERO), max_term())


def max_via_relu() -> Term:
    """`x + relu(y - x)`."""
    return seq(
        par(DUP, ID),
        par(ID, seq(par(scl(-1), ID), ADD, relu_term())),
        ADD,
    )


def relu_via_abs() -> Term:
    """`(x + |x|) / 2`."""
    return seq(DUP, par(ID, abs_term()), ADD, scl(Fraction(1, 2)))


def abs_via_relu() -> Term:
    """`relu(x) + relu(-x)`."""
    return seq(DUP, par(relu_term(), seq(scl(-1), relu_term())), ADD)


def L_from_max() -> Term:
    """`{(x, y) | max(-x, y) = 0}`, which is `L`."""
    return seq(
        par(ID, cap(1)),
        par(seq(par(scl(-1), ID), max_term(), COZERO), ID),
    )


def relu_network(layers: Sequence[Layer], *, inputs: int = 1) -> Term:
    """
    Exact relation of a feed-forward network with a ReLU after every layer.

    `inputs` fixes the width of the identity returned for an empty network.
    """
    if not layers:
        return Id(inputs)

    stages: list[Term] = []
    width = layers[0][0].cols
    for index, (weights, bias) in enumerate(layers):
        if weights.cols != width:
            raise LayerMismatch(
                f"layer {index} expects {weights.cols} inputs, previous layer gives {width}"
            )
        stages.append(affine_term(weights, bias))
        stages.append(par(*[relu_term()] * weights.rows))
        width = weights.rows
    return seq(*stages)
