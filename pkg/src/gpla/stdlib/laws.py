from __future__ import annotations

from itertools import product

from gpla.term import (
    ADD,
    CODEL,
    CODUP,
    COADD,
    COONE,
    COZERO,
    DEL,
    DUP,
    GEQ,
    ID,
    LEQ,
    ZERO,
    Term,
    par,
    scl,
    seq,
    union,
)

from .diode import L_gen, diode_term, geq_from_L, plus_from_vdash, vdash, vdash_from_L
from .functions import (
    L_from_max,
    abs_term,
    abs_via_relu,
    max_term,
    max_via_relu,
    relu_network,
    relu_term,
    relu_via_abs,
)
from .schema import Chain, Identity, Matrix
from .unions import (
    dup_abs,
    plus_gen,
    plus_n,
    plus_n_direct,
    union_from_plus,
    union_from_plus_split,
    union_gen,
    union_of_effects,
)


def _l_cells() -> tuple[Term, Term]:
    return seq(GEQ, COZERO, ZERO), seq(COZERO, ZERO, GEQ)


def _vdash_cells() -> tuple[Term, Term]:
    return seq(GEQ, COZERO, ZERO), seq(COZERO, CODEL)


def chains() -> list[Chain]:
    l_cells, v_cells = _l_cells(), _vdash_cells()
    return [
        Chain(
            "geq from L",
            [
                geq_from_L(),
                union(*[seq(COADD, par(ID, cell), ADD) for cell in l_cells]),
                union(GEQ, GEQ),
                GEQ,
            ],
        ),
        Chain(
            "vdash from L",
            [
                vdash_from_L(),
                union(
                    *[
                        seq(DUP, par(a, seq(b, scl(-1))), ADD)
                        for a, b in product(l_cells, repeat=2)
                    ]
                ),
                union(
                    seq(GEQ, COZERO, ZERO),
                    seq(COZERO, ZERO, LEQ),
                    seq(COZERO, ZERO, GEQ),
                    seq(COZERO, CODEL),
                ),
                vdash(),
            ],
        ),
        Chain(
            "plus from vdash",
            [
                plus_from_vdash(),
                union(
                    *[
                        seq(COADD, par(a, seq(scl(-1), b)), CODUP)
                        for a, b in product(v_cells, repeat=2)
                    ]
                ),
                union(
                    seq(DEL, ZERO),
                    seq(GEQ, COZERO, ZERO),
                    seq(LEQ, COZERO, ZERO),
                    seq(COZERO, CODEL),
                ),
                plus_gen(),
            ],
        ),
        *[
            Chain(
                f"union_gen({n}) from plus",
                [union_from_plus(n), union_from_plus_split(n), union_gen(n)],
            )
            for n in (1, 2)
        ],
    ]


def identities() -> list[Identity]:
    at_least_one = seq(GEQ, COONE)
    at_most_zero = seq(LEQ, COZERO)
    abs_network = relu_network(
        [
            (Matrix.of([[1], [-1]]), [0, 0]),
            (Matrix.of([[1, 1]]), [0]),
        ]
    )
    return [
        Identity("max is x + relu(y - x)", max_term(), max_via_relu()),
        Identity("relu is (x + abs x) / 2", relu_term(), relu_via_abs()),
        Identity("abs is relu x + relu(-x)", abs_term(), abs_via_relu()),
        Identity("L from max", L_from_max(), L_gen()),
        Identity("diode is mirrored L", diode_term(), seq(scl(-1), L_gen(), scl(-1))),
        Identity("dup_abs duplicates zero", seq(ZERO, dup_abs()), par(ZERO, ZERO)),
        Identity("dup_abs duplicates codel", seq(CODEL, dup_abs()), par(CODEL, CODEL)),
        Identity("plus_n(2)", plus_n(2), plus_n_direct(2)),
        Identity(
            "union of effects",
            union_of_effects(at_least_one, at_most_zero),
            union(at_least_one, at_most_zero),
        ),
        Identity(
            "union of effects, 2 wires",
            union_of_effects(
                par(at_least_one, at_most_zero), par(at_most_zero, at_least_one)
            ),
            union(par(at_least_one, at_most_zero), par(at_most_zero, at_least_one)),
        ),
        Identity("relu network for abs", abs_network, abs_term()),
    ]
