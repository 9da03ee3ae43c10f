from __future__ import annotations

from collections.abc import Iterable
from typing import Final

from loguru import logger

from .exceptions import DimensionMismatch
from .schema import Constraint, LinExpr, Polyhedron, Rel

FME_ROW_WARNING: Final = 512
"""Row count past which an elimination step logs a warning."""

_log = logger.bind(component="fme")


def _pivot(p: Polyhedron, var: int) -> Constraint | None:
    return next(
        (c for c in p.constraints if c.rel is Rel.EQ and c.expr.coeffs[var] != 0),
        None,
    )


def eliminate(p: Polyhedron, var: int) -> Polyhedron:
    """
    Project `var` out of `p`.

    An equality mentioning `var` is used as a Gaussian pivot; otherwise each
    inequality with a positive coefficient is paired with each one with a
    negative coefficient.
    """
    if not 0 <= var < p.dim:
        raise DimensionMismatch(f"coordinate {var} out of range for dimension {p.dim}")
    if p.is_trivially_empty:
        return Polyhedron.of(p.dim - 1, [Constraint.contradiction(p.dim - 1)])

    rows: list[Constraint] = []
    pivot = _pivot(p, var)

    if pivot is not None:
        a = pivot.expr.coeffs[var]
        for c in p.constraints:
            if c is pivot:
                continue
            b = c.expr.coeffs[var]
            expr = c.expr if b == 0 else c.expr - pivot.expr.scaled(b / a)
            rows.append(Constraint(expr, c.rel))
    else:
        pos: list[LinExpr] = []
        neg: list[LinExpr] = []
        for c in p.constraints:
            b = c.expr.coeffs[var]
            if b > 0:
                pos.append(c.expr)
            elif b < 0:
                neg.append(c.expr)
            else:
                rows.append(c)
        for up in pos:
            for down in neg:
                combined = up.scaled(-down.coeffs[var]) + down.scaled(up.coeffs[var])
                rows.append(Constraint(combined, Rel.GE))

    result = Polyhedron.of(
        p.dim - 1,
        [Constraint.of(row.expr.drop(var), row.rel) for row in rows],
    )

    _log.debug(
        "eliminate x{} ({}): {} -> {} rows",
        var,
        "pivot" if pivot is not None else "pairing",
        len(p.constraints),
        len(result.constraints),
    )
    if len(result.constraints) > FME_ROW_WARNING:
        _log.warning(
            "elimination produced {} rows in dimension {}",
            len(result.constraints),
            result.dim,
        )
    return result


def eliminate_all(p: Polyhedron, variables: Iterable[int]) -> Polyhedron:
    """Project out several coordinates; indices refer to `p`'s coordinates."""
    for var in sorted(set(variables), reverse=True):
        p = eliminate(p, var)
    return p


def project(p: Polyhedron, keep: Iterable[int]) -> Polyhedron:
    """Keep only the listed coordinates, in their original order."""
    kept = set(keep)
    return eliminate_all(p, [i for i in range(p.dim) if i not in kept])


def is_empty(p: Polyhedron) -> bool:
    """Eliminate every coordinate; the residue is contradictory iff `p` is empty."""
    return eliminate_all(p, range(p.dim)).is_trivially_empty
