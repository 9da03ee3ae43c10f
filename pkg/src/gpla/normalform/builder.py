from __future__ import annotations

from collections.abc import Iterable, Sequence
from functools import reduce
from itertools import product

from loguru import logger

from gpla.polyhedron import (
    Constraint,
    EmptyInterval,
    Polyhedron,
    Range,
    Rel,
    is_empty,
    is_subset,
    range_of,
)
from gpla.semantics import PLRelation
from gpla.term import Arity

from .exceptions import EmptyPolyhedronError, NotRepresentable
from .schema import Cell, Hyperplane, PLNormalForm, Sign, Valuation

_log = logger.bind(component="normalform")


def _sign_of(p: Polyhedron, h: Hyperplane) -> Sign | None:
    """The least sign condition on `h` containing `p`, if any."""
    match range_of(p, h.expr):
        case EmptyInterval():
            raise EmptyPolyhedronError(f"empty polyhedron {p.render()}")
        case Range(lo=lo, hi=hi) if lo == 0 and hi == 0:
            return Sign.ZERO
        case Range(lo=lo) if lo is not None and lo >= 0:
            return Sign.NONNEG
        case Range(hi=hi) if hi is not None and hi <= 0:
            return Sign.NONPOS
    return None


def minimal_valuation(p: Polyhedron, hs: Sequence[Hyperplane]) -> Valuation:
    """
    The pointwise-least valuation over `hs` denoting `p`.

    Raises `NotRepresentable` when `p` crosses one of `hs`, or when `p` is
    strictly smaller than every polyhedron the hyperplanes can carve out.
    """
    signs: list[Sign] = []
    for h in hs:
        sign = _sign_of(p, h)
        if sign is None:
            raise NotRepresentable(f"{p.render()} crosses the hyperplane {h}")
        signs.append(sign)

    # the cell contains p; it must not be larger
    known = set(hs)
    cell = Polyhedron.of(
        p.dim, [s.constraint(h) for s, h in zip(signs, hs, strict=True)]
    )
    for c in p.constraints:
        if c.is_contradiction or Hyperplane.of(c.expr) in known:
            continue
        if not is_subset(cell, Polyhedron.of(p.dim, [c])):
            raise NotRepresentable(f"{p.render()} needs the hyperplane {c.expr}")
    return tuple(signs)


def poly_nf(p: Polyhedron) -> tuple[tuple[Hyperplane, ...], Valuation]:
    """Hyperplanes read off `p`'s own rows, with the minimal valuation over them."""
    if is_empty(p):
        raise EmptyPolyhedronError(f"empty polyhedron {p.render()}")
    hs = tuple(dict.fromkeys(Hyperplane.of(c.expr) for c in p.constraints))
    return hs, minimal_valuation(p, hs)


def _split(p: Polyhedron, h: Hyperplane) -> list[Polyhedron]:
    """
    Cut `p` along `h`.

    A side is only kept when `h` genuinely crosses `p`; otherwise `p` already
    lies in one closed half-space and stays whole.
    """
    match range_of(p, h.expr):
        case Range(lo=lo, hi=hi) if (lo is None or lo < 0) and (hi is None or hi > 0):
            return [
                p.with_constraints(Constraint.of(h.expr, Rel.GE)),
                p.with_constraints(Constraint.of(-h.expr, Rel.GE)),
            ]
        case EmptyInterval():
            return []
    return [p]


def _merge(arity: Arity, hs: Sequence[Hyperplane], cells: Iterable[Cell]) -> PLNormalForm:
    return PLNormalForm(arity, tuple(hs), tuple(dict.fromkeys(cells)))


def add_hyperplane(nf: PLNormalForm, h: Hyperplane) -> PLNormalForm:
    """Refine every cell by `h`, appending `h` to the shared list."""
    if h in nf.hyperplanes:
        return nf
    hs = (*nf.hyperplanes, h)
    cells: list[Cell] = []
    for cell in nf.cells:
        for piece in _split(nf.cell_polyhedron(cell), h):
            cells.append(Cell(minimal_valuation(piece, hs)))
    return _merge(nf.arity, hs, cells)


def pl_nf(r: PLRelation) -> PLNormalForm:
    """A normal form of `r` over the union of all its cells' hyperplanes."""
    components: list[PLNormalForm] = []
    for p in r.polys:
        try:
            hs, valuation = poly_nf(p)
        except EmptyPolyhedronError:
            continue
        components.append(PLNormalForm(r.arity, hs, (Cell(valuation),)))

    shared = shared_hyperplanes(*components)
    cells = [c for nf in components for c in extend_to(nf, shared).cells]

    result = _merge(r.arity, shared, cells)
    _log.debug(
        "normal form {}: {} hyperplanes, {} cells",
        result.arity,
        len(result.hyperplanes),
        len(result.cells),
    )
    return result


def valuations_exhaustive(p: Polyhedron, hs: Sequence[Hyperplane]) -> Valuation | None:
    """
    Meet of every valuation over `hs` denoting exactly `p`, by enumeration.

    Reference implementation of `minimal_valuation`; exponential in `len(hs)`.
    """
    found: list[Valuation] = []
    for signs in product(Sign, repeat=len(hs)):
        cell = Polyhedron.of(
            p.dim, [s.constraint(h) for s, h in zip(signs, hs, strict=True)]
        )
        if is_subset(cell, p) and is_subset(p, cell):
            found.append(signs)
    if not found:
        return None
    return tuple(reduce(Sign.meet, column) for column in zip(*found, strict=True))


def shared_hyperplanes(*forms: PLNormalForm) -> tuple[Hyperplane, ...]:
    """Union of the forms' hyperplane lists, in first-seen order."""
    return tuple(dict.fromkeys(h for nf in forms for h in nf.hyperplanes))


def extend_to(nf: PLNormalForm, hs: Sequence[Hyperplane]) -> PLNormalForm:
    """Refine `nf` by every hyperplane of `hs` and lay it out in `hs`'s order."""
    return reduce(add_hyperplane, hs, nf).reordered(hs)
