from __future__ import annotations

from fractions import Fraction

from gpla.term import Term, register_macro
from gpla.utils.parsing import Arg, nat_arg

from .diode import L_gen, diode_term, vdash
from .functions import abs_term, max_term, relu_term
from .linear import affine_term, matrix_term
from .schema import Matrix
from .unions import dup_abs, plus_gen, union_gen, zero_or_one


def _rationals(arg: Arg, what: str) -> tuple[Fraction, ...]:
    if not isinstance(arg, tuple):
        raise ValueError(f"{what} expects a bracketed list of rationals")
    return arg


@register_macro("mat")
def _mat(*args: Arg) -> Term:
    """`mat(rows, cols, [entries...])`, entries row-major."""
    rows, cols = nat_arg(args, 0, "mat"), nat_arg(args, 1, "mat")
    return matrix_term(Matrix(rows, cols, _rationals(args[2], "mat")))


@register_macro("aff")
def _aff(*args: Arg) -> Term:
    """`aff(rows, cols, [entries...], [bias...])`."""
    rows, cols = nat_arg(args, 0, "aff"), nat_arg(args, 1, "aff")
    weights = Matrix(rows, cols, _rationals(args[2], "aff"))
    return affine_term(weights, _rationals(args[3], "aff"))


@register_macro("union")
@register_macro("unionN")
def _union(*args: Arg) -> Term:
    return union_gen(nat_arg(args, 0, "union"))


register_macro("max")(max_term)
register_macro("abs")(abs_term)
register_macro("relu")(relu_term)
register_macro("plus")(plus_gen)
register_macro("L")(L_gen)
register_macro("diode")(diode_term)
register_macro("vdash")(vdash)
register_macro("dupabs")(dup_abs)
register_macro("zero_or_one")(zero_or_one)
