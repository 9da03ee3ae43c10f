from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction
from itertools import product
from typing import Final

from gpla.polyhedron.schema import Rat
from gpla.stdlib import chains, identities
from gpla.term import (
    CODEL,
    COZERO,
    GEQ,
    LEQ,
    ONE,
    ZERO,
    Id,
    Term,
    cap,
    cup,
    dual,
    dual_via_cups,
    effect,
    par,
    parse,
    seq,
)

from .schema import Axiom, AxiomKind, ScalarCondition

DEFAULT_SCALARS: Final[tuple[Fraction, ...]] = (
    Fraction(2),
    Fraction(-1),
    Fraction(1, 2),
    Fraction(-3, 5),
    Fraction(0),
)

EQ, LEQ_KIND = AxiomKind.EQ, AxiomKind.LEQ

# Term text for each law. Wires read top to bottom; `&` stacks, `;` composes.
# Colour names: black comonoid dup/del, black monoid codup/codel,
# white monoid add/zero, white comonoid coadd/cozero.

_PLAIN: Final[list[tuple[str, str, str, AxiomKind]]] = [
    # copying and adding
    ("●-coas", "dup ; (dup & id)", "dup ; (id & dup)", EQ),
    ("●-coco", "dup ; sw", "dup", EQ),
    ("●-counl", "dup ; (del & id)", "id", EQ),
    ("●-as", "(add & id) ; add", "(id & add) ; add", EQ),
    ("●-co", "sw ; add", "add", EQ),
    ("●-unl", "(zero & id) ; add", "id", EQ),
    ("○●-bi", "add ; dup", "(dup & dup) ; (id & sw & id) ; (add & add)", EQ),
    ("○●-biun", "zero ; dup", "zero & zero", EQ),
    ("●○-biun", "add ; del", "del & del", EQ),
    ("○●-bo", "zero ; del", "id(0)", EQ),
    # relations: mirrored structure and Frobenius laws
    ("●-fr1", "(dup & id) ; (id & codup)", "codup ; dup", EQ),
    ("●-fr2", "(id & dup) ; (codup & id)", "codup ; dup", EQ),
    ("●-sp", "dup ; codup", "id", EQ),
    ("●-bo", "codel ; del", "id(0)", EQ),
    ("○-fr1", "(coadd & id) ; (id & add)", "add ; coadd", EQ),
    ("○-fr2", "(id & coadd) ; (add & id)", "add ; coadd", EQ),
    ("○-sp", "coadd ; add", "id", EQ),
    ("○-bo", "zero ; cozero", "id(0)", EQ),
    ("cup-1", "(id & scl(-1)) ; codup ; del", "add ; cozero", EQ),
    ("cap-1", "codel ; dup ; (id & scl(-1))", "zero ; coadd", EQ),
    ("○⊆●", "zero", "codel", LEQ_KIND),
    # order
    ("≤dup", "geq ; dup", "dup ; (geq & geq)", LEQ_KIND),
    ("≤add", "(geq & geq) ; add", "add ; geq", EQ),
    ("≤del", "geq ; del", "del", EQ),
    ("≤zero", "zero", "zero ; geq", LEQ_KIND),
    ("antisym", "dup ; (geq & leq) ; codup", "id", LEQ_KIND),
    # reading: splitting x below a pair of bounds splits the bound on x
    ("Riesz", "coadd ; (leq & leq)", "leq ; coadd", EQ),
    # reading: anything below something is related to anything above it
    ("direct", "leq ; geq", "del ; codel", EQ),
    # affine
    ("1-dup", "one ; dup", "one & one", EQ),
    ("1-del", "one ; del", "id(0)", EQ),
    ("∅", "(one ; cozero) & id", "(one ; cozero) & (del ; codel)", EQ),
    ("0≤1", "zero ; leq ; coone", "id(0)", EQ),
    # the one law beyond polyhedra
    ("total", "codel", "(zero ; leq) | (zero ; geq)", EQ),
]

# Mirror images of the copy and add laws. The black ones reuse the names of
# the laws they mirror.
_MIRRORED: Final[list[tuple[str, str, str]]] = [
    ("●-coas", "(codup & id) ; codup", "(id & codup) ; codup"),
    ("●-coco", "sw ; codup", "codup"),
    ("●-counl", "(codel & id) ; codup", "id"),
    ("○-coas", "coadd ; (coadd & id)", "coadd ; (id & coadd)"),
    ("○-coco", "coadd ; sw", "coadd"),
    ("○-counl", "coadd ; (cozero & id)", "id"),
]

_UNARY: Final[list[tuple[str, str, str, AxiomKind, ScalarCondition]]] = [
    ("add", "add ; scl({r})", "(scl({r}) & scl({r})) ; add", EQ, ScalarCondition.NONE),
    ("zero", "zero ; scl({r})", "zero", EQ, ScalarCondition.NONE),
    ("dup", "scl({r}) ; dup", "dup ; (scl({r}) & scl({r}))", EQ, ScalarCondition.NONE),
    ("del", "scl({r}) ; del", "del", EQ, ScalarCondition.NONE),
    ("r-inv", "scl({r}) ; coscl({r})", "id", EQ, ScalarCondition.NONZERO),
    ("r-coinv", "id", "coscl({r}) ; scl({r})", EQ, ScalarCondition.NONZERO),
    ("≤r+", "scl({r}) ; geq", "geq ; scl({r})", EQ, ScalarCondition.POSITIVE),
    ("≤r-", "scl({r}) ; geq", "leq ; scl({r})", EQ, ScalarCondition.NEGATIVE),
]

_BINARY: Final[list[tuple[str, str, str]]] = [
    ("×", "scl({r}) ; scl({s})", "scl({prod})"),
    ("+", "dup ; (scl({r}) & scl({s})) ; add", "scl({sum})"),
]


def all_axioms(scalar_samples: Sequence[Rat] = DEFAULT_SCALARS) -> list[Axiom]:
    """Every law instance, scalar families taken at each admissible sample."""
    samples = [Fraction(r) for r in dict.fromkeys(scalar_samples)]
    if not samples:
        raise ValueError("at least one scalar sample is required")

    axioms = [
        Axiom(name, parse(lhs), parse(rhs), kind) for name, lhs, rhs, kind in _PLAIN
    ]
    axioms.extend(
        Axiom(name, parse(lhs), parse(rhs), variant="mirrored")
        for name, lhs, rhs in _MIRRORED
    )
    for name, lhs, rhs, kind, condition in _UNARY:
        axioms.extend(
            Axiom(
                name,
                parse(lhs.format(r=r)),
                parse(rhs.format(r=r)),
                kind,
                condition,
                scalars=(r,),
            )
            for r in samples
            if condition.admits(r)
        )
    for name, lhs, rhs in _BINARY:
        axioms.extend(
            Axiom(
                name,
                parse(lhs.format(r=r, s=s)),
                parse(rhs.format(prod=r * s, sum=r + s)),
                scalars=(r, s),
            )
            for r, s in product(samples, repeat=2)
        )
    axioms.append(
        Axiom("0", parse("scl(0)"), parse("del ; zero"), scalars=(Fraction(0),))
    )
    return axioms


def negative_controls() -> list[Axiom]:
    """Instances that must fail: each shows a side condition or direction matters."""
    return [
        Axiom(
            "r-inv",
            parse("scl(0) ; coscl(0)"),
            parse("id"),
            scalar_condition=ScalarCondition.NONZERO,
            scalars=(Fraction(0),),
            expected="fails",
        ),
        Axiom("○⊆● reversed", CODEL, ZERO, AxiomKind.LEQ, expected="fails"),
        Axiom("direct corrupted", parse("leq ; leq"), parse("del ; codel"), expected="fails"),
    ]


_ORDER_SAMPLES: Final[list[tuple[str, str, str]]] = [
    ("zero", "codel", "holds"),
    ("codel", "zero", "fails"),
    ("geq ; geq", "geq", "holds"),
    ("geq", "leq", "fails"),
    ("(one ; cozero) & id", "id", "holds"),
    ("dup", "dup ; (geq & id)", "holds"),
    ("add ; geq", "(geq & id) ; add", "holds"),
    ("relu", "abs", "fails"),
]

_DUALITY_SAMPLES: Final[list[str]] = [
    "dup",
    "add ; geq",
    "one ; dup ; (id & scl(2))",
    "(geq & leq) ; codup",
    "relu",
    "(zero ; leq) | (one ; geq)",
]


def _snakes(n: int) -> list[Axiom]:
    return [
        Axiom("snake-left", seq(par(cap(n), Id(n)), par(Id(n), cup(n))), Id(n), scalars=(n,)),
        Axiom("snake-right", seq(par(Id(n), cap(n)), par(cup(n), Id(n))), Id(n), scalars=(n,)),
    ]


def derived_laws() -> list[Axiom]:
    """
    Consequences checked alongside the axioms.

    Snake equations, duals built with caps and cups, order preserved under
    mirroring and under bending into effects, the piecewise-linear identities
    and each displayed derivation step.
    """
    laws: list[Axiom] = [law for n in (1, 2, 3) for law in _snakes(n)]

    for text in _DUALITY_SAMPLES:
        t = parse(text)
        laws.append(Axiom(f"dual by cups: {text}", dual(t), dual_via_cups(t)))

    for lhs, rhs, expected in _ORDER_SAMPLES:
        t, u = parse(lhs), parse(rhs)
        for label, transform in (("", _same), ("op ", dual), ("effect ", effect)):
            laws.append(
                Axiom(
                    f"{label}order: {lhs} ≤ {rhs}",
                    transform(t),
                    transform(u),
                    AxiomKind.LEQ,
                    expected=expected,
                )
            )

    laws.extend(Axiom(i.name, i.lhs, i.rhs) for i in identities())
    for chain in chains():
        laws.extend(
            Axiom(f"{chain.name}, step {k + 1}", a, b)
            for k, (a, b) in enumerate(zip(chain.steps, chain.steps[1:], strict=False))
        )
    laws.append(Axiom("geq bent by cups", dual_via_cups(GEQ), LEQ))
    laws.append(Axiom("zero bent by cups", dual_via_cups(ZERO), COZERO))
    laws.append(Axiom("one is not zero", ONE, ZERO, expected="fails"))
    return laws


def _same(t: Term) -> Term:
    return t
