from __future__ import annotations

from fractions import Fraction

from gpla.polyhedron import NoPoint, NoWitness, Point, sample_point, strict_witness

from .exceptions import InternalError
from .schema import Cell, PLNormalForm, Sign


def interior_point(nf: PLNormalForm, c: Cell) -> Point:
    """
    A point of the cell where every non-`0` hyperplane is strictly nonzero.

    One witness is found per strict condition and the witnesses are averaged:
    the average stays in the (convex) cell and keeps each condition strict.
    """
    p = nf.cell_polyhedron(c)
    witnesses: list[Point] = []
    for sign, h in zip(c.valuation, nf.hyperplanes, strict=True):
        if sign is Sign.ZERO:
            continue
        form = h.expr if sign is Sign.NONNEG else -h.expr
        match strict_witness(p, form):
            case NoWitness():
                raise InternalError(
                    f"cell {sign}{h} of {p.render()} has no strict point; "
                    "its valuation is not minimal"
                )
            case point:
                witnesses.append(point)

    if not witnesses:
        match sample_point(p):
            case NoPoint():
                raise InternalError(f"empty cell {p.render()} in a normal form")
            case point:
                return point

    k = len(witnesses)
    return tuple(
        sum(column, Fraction(0)) / k for column in zip(*witnesses, strict=True)
    )
