from __future__ import annotations

from collections.abc import Sequence
from enum import IntEnum
from fractions import Fraction
from functools import reduce
from typing import Final

from .exceptions import TermTypeError
from .schema import Gen, Generator, GenTag, Id, Par, Seq, Swap, Term, Union


def gen(tag: GenTag, scalar: Fraction | int | str | None = None) -> Gen:
    return Gen(Generator(tag, scalar))


def scl(r: Fraction | int | str) -> Gen:
    return gen(GenTag.SCALAR, r)


def coscl(r: Fraction | int | str) -> Gen:
    return gen(GenTag.COSCALAR, r)


DUP: Final = gen(GenTag.DUP)
DEL: Final = gen(GenTag.DEL)
CODUP: Final = gen(GenTag.CODUP)
CODEL: Final = gen(GenTag.CODEL)
ADD: Final = gen(GenTag.ADD)
ZERO: Final = gen(GenTag.ZERO)
COADD: Final = gen(GenTag.COADD)
COZERO: Final = gen(GenTag.COZERO)
ONE: Final = gen(GenTag.ONE)
COONE: Final = gen(GenTag.COONE)
GEQ: Final = gen(GenTag.GEQ)
LEQ: Final = gen(GenTag.LEQ)
SWAP: Final = Swap()
ID: Final = Id(1)


def seq(*terms: Term) -> Term:
    """
    Sequential composite of one or more terms, left nested.

    Identities are dropped once the whole chain has type-checked.
    """
    if not terms:
        raise ValueError("seq needs at least one term")
    for first, second in zip(terms, terms[1:], strict=False):
        if first.arity.right != second.arity.left:
            raise TermTypeError(
                f"cannot compose {first.arity} with {second.arity}", (first, second)
            )
    kept = [t for t in terms if not isinstance(t, Id)]
    if not kept:
        return terms[0]
    return reduce(Seq, kept)


def par(*terms: Term) -> Term:
    """Monoidal product, left nested; `id(0)` factors vanish, adjacent ids merge."""
    kept: list[Term] = []
    for t in terms:
        match t:
            case Id(n=0):
                continue
            case Id(n=n) if kept and isinstance(kept[-1], Id):
                kept[-1] = Id(kept[-1].n + n)
            case _:
                kept.append(t)
    if not kept:
        return Id(0)
    return reduce(Par, kept)


def union(*terms: Term) -> Term:
    """Join of one or more terms, nested to the right."""
    if not terms:
        raise ValueError("union needs at least one term")
    return reduce(lambda acc, t: Union(t, acc), reversed(terms[:-1]), terms[-1])


def wiring(perm: Sequence[int]) -> Term:
    """
    A network of swaps sending input wire `i` to output wire `perm[i]`.

    Built by bubble-sorting the targets with adjacent transpositions.
    """
    n = len(perm)
    if sorted(perm) != list(range(n)):
        raise ValueError(f"not a permutation of {n} wires: {list(perm)}")

    targets = list(perm)
    layers: list[Term] = []
    changed = True
    while changed:
        changed = False
        for k in range(n - 1):
            if targets[k] > targets[k + 1]:
                targets[k], targets[k + 1] = targets[k + 1], targets[k]
                layers.append(par(Id(k), SWAP, Id(n - k - 2)))
                changed = True
    if not layers:
        return Id(n)
    return seq(*layers)


def sym(n: int, m: int) -> Term:
    """The symmetry `n+m → m+n` exchanging the two blocks."""
    return wiring([m + i for i in range(n)] + list(range(m)))


def cup(n: int) -> Term:
    """The `2n → 0` half turn equating its two n-wire blocks."""
    if n == 0:
        return Id(0)
    interleave = [2 * i for i in range(n)] + [2 * i + 1 for i in range(n)]
    return seq(wiring(interleave), par(*[Seq(CODUP, DEL)] * n))


def cap(n: int) -> Term:
    """The `0 → 2n` half turn, mirror of `cup`."""
    return dual(cup(n))


def dual(t: Term) -> Term:
    """Mirror a term left to right, swapping every generator for its mirror."""
    match t:
        case Gen(generator=g):
            return Gen(g.mirror())
        case Id() | Swap():
            return t
        case Seq(first=a, second=b):
            return Seq(dual(b), dual(a))
        case Par(top=a, bottom=b):
            return Par(dual(a), dual(b))
        case Union(first=a, second=b):
            return Union(dual(a), dual(b))


def dual_via_cups(t: Term) -> Term:
    """The opposite of `t` obtained by bending its wires with caps and cups."""
    n, m = t.arity
    return seq(
        par(cap(n), Id(m)),
        par(Id(n), t, Id(m)),
        par(Id(n), cup(m)),
    )


def effect(t: Term) -> Term:
    """Bend the right ports of `t: n → m` to the left, giving `n+m → 0`."""
    m = t.arity.right
    return seq(par(t, Id(m)), cup(m))


class Fragment(IntEnum):
    """Sub-theories of the language, ordered by inclusion."""

    MATRIX = 0
    LINEAR = 1
    AFFINE = 2
    POLYHEDRAL = 3
    PL = 4


_TAG_FRAGMENT: Final[dict[GenTag, Fragment]] = {
    GenTag.DUP: Fragment.MATRIX,
    GenTag.DEL: Fragment.MATRIX,
    GenTag.ADD: Fragment.MATRIX,
    GenTag.ZERO: Fragment.MATRIX,
    GenTag.SCALAR: Fragment.MATRIX,
    GenTag.CODUP: Fragment.LINEAR,
    GenTag.CODEL: Fragment.LINEAR,
    GenTag.COADD: Fragment.LINEAR,
    GenTag.COZERO: Fragment.LINEAR,
    GenTag.COSCALAR: Fragment.LINEAR,
    GenTag.ONE: Fragment.AFFINE,
    GenTag.COONE: Fragment.AFFINE,
    GenTag.GEQ: Fragment.POLYHEDRAL,
    GenTag.LEQ: Fragment.POLYHEDRAL,
}


def fragment(t: Term) -> Fragment:
    """The smallest sub-theory whose generators suffice to write `t`."""
    match t:
        case Gen(generator=g):
            return _TAG_FRAGMENT[g.tag]
        case Id() | Swap():
            return Fragment.MATRIX
        case Seq(first=a, second=b) | Par(top=a, bottom=b):
            return max(fragment(a), fragment(b))
        case Union():
            return Fragment.PL
