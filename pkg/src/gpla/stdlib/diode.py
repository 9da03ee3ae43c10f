from __future__ import annotations

from gpla.term import ADD, CODEL, CODUP, COADD, COZERO, DUP, GEQ, ID, LEQ, ZERO, Term, par, scl, seq, union


def L_gen() -> Term:
    """`{(x, y) | x ≥ 0, y = 0} ∪ {(x, y) | x = 0, y ≤ 0}`."""
    return union(seq(GEQ, COZERO, ZERO), seq(COZERO, ZERO, GEQ))


def diode_term() -> Term:
    """Mirror image of `L`: `{x ≤ 0, y = 0} ∪ {x = 0, y ≥ 0}`."""
    return union(seq(LEQ, COZERO, ZERO), seq(COZERO, ZERO, LEQ))


def geq_from_L() -> Term:
    """`x ≥ y` recovered from `L` and the additive structure."""
    return seq(COADD, par(ID, L_gen()), ADD)


def vdash() -> Term:
    """`{x ≥ 0, y = 0} ∪ {x = 0}`."""
    return union(seq(GEQ, COZERO, ZERO), seq(COZERO, CODEL))


def vdash_from_L() -> Term:
    return seq(DUP, par(L_gen(), seq(L_gen(), scl(-1))), ADD)


def plus_from_vdash() -> Term:
    return seq(COADD, par(vdash(), seq(scl(-1), vdash())), CODUP)
