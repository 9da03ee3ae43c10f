from __future__ import annotations

from gpla.term import (
    CODEL,
    CODUP,
    COZERO,
    DEL,
    DUP,
    GEQ,
    ID,
    LEQ,
    ONE,
    ZERO,
    Id,
    Term,
    dual,
    par,
    scl,
    seq,
    union,
)

from .linear import block_wiring, copies, vadd, vcodel, vcozero, vdel, vscale, vzero


def union_gen(n: int) -> Term:
    """`2n → n`: output one of the two input vectors."""
    if n < 1:
        raise ValueError("union_gen needs n >= 1")
    return union(par(Id(n), vdel(n)), par(vdel(n), Id(n)))


def union_of_effects(c: Term, d: Term) -> Term:
    """Join two nonempty `n → 0` effects with the mirrored union generator."""
    return seq(dual(union_gen(c.arity.left)), par(c, d))


def plus_gen() -> Term:
    """`1 → 1`, the union of the two axes: `{(x, y) | x = 0 ∨ y = 0}`."""
    return union(seq(COZERO, CODEL), seq(DEL, ZERO))


def zero_or_one() -> Term:
    """`0 → 1`, the two-point set `{0, 1}`."""
    return union(ZERO, ONE)


def _box() -> Term:
    """`{(x, y) | -x ≤ y ≤ x}`."""
    return seq(DUP, par(GEQ, seq(scl(-1), LEQ)), CODUP)


def dup_abs() -> Term:
    """
    `1 → 2`, `{(x, (y, z)) | |y| ≤ |x|, |z| ≤ |x|}`.

    Built from order and union alone, it duplicates both the `zero` and the
    `codel` units.
    """
    box2 = union(_box(), seq(scl(-1), _box()))
    return seq(DUP, par(box2, box2))


def dup_n(n: int) -> Term:
    """`1 → n`, chained `dup_abs`."""
    if n < 1:
        raise ValueError("dup_n needs n >= 1")
    if n == 1:
        return ID
    return seq(dup_abs(), par(ID, dup_n(n - 1)))


def plus_n(n: int) -> Term:
    """`n → n`, `{(x, y) | x = 0 ∨ y = 0}` for vectors."""
    return seq(dual(dup_n(n)), plus_gen(), dup_n(n))


def plus_n_direct(n: int) -> Term:
    return union(seq(vcozero(n), vcodel(n)), seq(vdel(n), vzero(n)))


def _union_via(n: int, plus: Term) -> Term:
    # wires: x, y | z1, z2, z3 copies of a fresh z; u = z1 - x passes `plus`
    # to v, then v + y - z2 is forced to 0 and z3 is the output
    return seq(
        par(Id(2 * n), vcodel(n)),
        par(Id(2 * n), copies(n, 3)),
        block_wiring(n, [0, 2, 1, 3, 4]),
        par(seq(par(vscale(n, -1), Id(n)), vadd(n), plus), Id(3 * n)),
        par(vadd(n), vscale(n, -1), Id(n)),
        par(vadd(n), Id(n)),
        par(vcozero(n), Id(n)),
    )


def union_from_plus(n: int) -> Term:
    """`union_gen(n)` rebuilt from the vector `+`."""
    return _union_via(n, plus_n(n))


def union_from_plus_split(n: int) -> Term:
    """`union_from_plus` with its `+` distributed into the two axis cases."""
    return union(
        _union_via(n, seq(vcozero(n), vcodel(n))),
        _union_via(n, seq(vdel(n), vzero(n))),
    )
