from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction
from itertools import product
from typing import Final

from loguru import logger

from gpla.polyhedron import Polyhedron, eliminate_all, is_empty
from gpla.term import (
    Arity,
    Gen,
    Generator,
    GenTag,
    Id,
    Par,
    Seq,
    Swap,
    Term,
    Union,
)

from .exceptions import ArityMismatch
from .schema import PLRelation

_log = logger.bind(component="semantics")

# Generators whose mirror image is derived by opposite_rel. Rows are
# (coefficients..., constant) over left ports then right ports.
_BASE_ROWS: Final[dict[GenTag, tuple[list[list[int]], list[list[int]]]]] = {
    # tag: (ge rows, eq rows)
    GenTag.DUP: ([], [[1, -1, 0, 0], [1, 0, -1, 0]]),
    GenTag.DEL: ([], []),
    GenTag.ADD: ([], [[1, 1, -1, 0]]),
    GenTag.ZERO: ([], [[1, 0]]),
    GenTag.ONE: ([], [[1, -1]]),
    GenTag.GEQ: ([[1, -1, 0]], []),
}


def _block_swap(n: int, m: int) -> list[int]:
    return [m + i for i in range(n)] + list(range(m))


def identity_rel(n: int) -> PLRelation:
    rows = [[0] * (2 * n) + [0] for _ in range(n)]
    for i, row in enumerate(rows):
        row[i], row[n + i] = 1, -1
    return PLRelation.of(n, n, [Polyhedron.build(2 * n, eq=rows)])


def empty_rel(left: int, right: int) -> PLRelation:
    return PLRelation.of(left, right)


def generator_rel(g: Generator) -> PLRelation:
    """The single-cell relation of a generator."""
    if g.tag in (GenTag.SCALAR, GenTag.COSCALAR):
        assert g.scalar is not None
        cell = Polyhedron.build(2, eq=[[g.scalar, -1, 0]])
        rel = PLRelation(Arity(1, 1), (cell,))
        return rel if g.tag is GenTag.SCALAR else opposite_rel(rel)

    if g.tag in _BASE_ROWS:
        ge, eq = _BASE_ROWS[g.tag]
        return PLRelation(g.arity, (Polyhedron.build(sum(g.arity), ge=ge, eq=eq),))
    return opposite_rel(generator_rel(g.mirror()))


def swap_rel() -> PLRelation:
    cell = Polyhedron.build(4, eq=[[1, 0, 0, -1, 0], [0, 1, -1, 0, 0]])
    return PLRelation.of(2, 2, [cell])


def compose_rel(r: PLRelation, s: PLRelation) -> PLRelation:
    """
    Relational composite `r ; s`, cell by cell.

    Each pair of cells meets on the shared boundary, which is then projected
    away; empty results are dropped.
    """
    if r.arity.right != s.arity.left:
        raise ArityMismatch(f"cannot compose {r.arity} with {s.arity}")
    n, m, k = r.arity.left, r.arity.right, s.arity.right

    cells: list[Polyhedron] = []
    for p, q in product(r.polys, s.polys):
        joint = p.pad(0, k).intersect(q.pad(n, 0))
        if joint.is_trivially_empty:
            continue
        cell = eliminate_all(joint, range(n, n + m))
        if not is_empty(cell):
            cells.append(cell)

    _log.debug(
        "compose {} ; {}: {}x{} cells -> {}", r.arity, s.arity, len(r), len(s), len(cells)
    )
    return PLRelation.of(n, k, cells)


def tensor_rel(r: PLRelation, s: PLRelation) -> PLRelation:
    """Monoidal product; coordinates laid out as (left r, left s, right r, right s)."""
    (n1, m1), (n2, m2) = r.arity, s.arity
    perm = (
        list(range(n1))
        + [n1 + n2 + j for j in range(m1)]
        + [n1 + k for k in range(n2)]
        + [n1 + n2 + m1 + q for q in range(m2)]
    )
    cells = [p.direct_sum(q).reindex(perm) for p, q in product(r.polys, s.polys)]
    return PLRelation.of(n1 + n2, m1 + m2, cells)


def union_rel(r: PLRelation, s: PLRelation) -> PLRelation:
    if r.arity != s.arity:
        raise ArityMismatch(f"cannot join {r.arity} with {s.arity}")
    return PLRelation(r.arity, r.polys + s.polys)


def opposite_rel(r: PLRelation) -> PLRelation:
    n, m = r.arity
    perm = _block_swap(n, m)
    return PLRelation(r.arity.reversed(), tuple(p.reindex(perm) for p in r.polys))


def member(x: Sequence[Fraction], r: PLRelation) -> bool:
    return r.contains(x)


def evaluate(t: Term) -> PLRelation:
    """The piecewise-linear relation denoted by `t`."""
    match t:
        case Gen(generator=g):
            return generator_rel(g)
        case Id(n=n):
            return identity_rel(n)
        case Swap():
            return swap_rel()
        case Seq(first=a, second=b):
            return compose_rel(evaluate(a), evaluate(b))
        case Par(top=a, bottom=b):
            return tensor_rel(evaluate(a), evaluate(b))
        case Union(first=a, second=b):
            return union_rel(evaluate(a), evaluate(b))
