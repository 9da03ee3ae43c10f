from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction

from .exceptions import DimensionMismatch, PolyhedronError
from .fme import eliminate, eliminate_all
from .schema import (
    Constraint,
    EmptyInterval,
    Interval,
    LinExpr,
    NoPoint,
    NoWitness,
    Point,
    Polyhedron,
    Range,
    Rel,
)


def _last_coordinate_range(p: Polyhedron, prefix: Sequence[Fraction]) -> Interval:
    """Feasible values of the last coordinate once the others are fixed to `prefix`."""
    lo: Fraction | None = None
    hi: Fraction | None = None
    for c in p.constraints:
        *head, a = c.expr.coeffs
        rest = sum((b * v for b, v in zip(head, prefix, strict=True)), c.expr.const)
        if a == 0:
            if not (rest >= 0 if c.rel is Rel.GE else rest == 0):
                return EmptyInterval()
            continue
        bound = -rest / a
        if c.rel is Rel.EQ or a > 0:
            lo = bound if lo is None else max(lo, bound)
        if c.rel is Rel.EQ or a < 0:
            hi = bound if hi is None else min(hi, bound)
    if lo is not None and hi is not None and lo > hi:
        return EmptyInterval()
    return Range(lo, hi)


def _choose(interval: Range) -> Fraction:
    match interval:
        case Range(lo=None, hi=None):
            return Fraction(0)
        case Range(lo=lo, hi=None) if lo is not None:
            return lo + 1
        case Range(lo=None, hi=hi) if hi is not None:
            return hi - 1
        case Range(lo=lo, hi=hi) if lo is not None and hi is not None:
            return (lo + hi) / 2
    raise AssertionError(interval)


def range_of(p: Polyhedron, f: LinExpr) -> Interval:
    """The exact image `{f(x) | x ∈ p}`; finite endpoints are attained."""
    if f.dim != p.dim:
        raise DimensionMismatch(f"form of dimension {f.dim} on dimension {p.dim}")
    t = LinExpr.var(p.dim + 1, p.dim)
    graph = p.pad(0, 1).with_constraints(Constraint.of(f.pad(0, 1) - t, Rel.EQ))
    image = eliminate_all(graph, range(p.dim))
    if image.is_trivially_empty:
        return EmptyInterval()
    return _last_coordinate_range(image, ())


def sample_point(p: Polyhedron) -> Point | NoPoint:
    """
    A deterministic rational point of `p`.

    Coordinates are eliminated from the highest index down, then chosen in
    order by back-substitution: the midpoint of a finite interval, one unit
    inside a half-line, and 0 when unconstrained.
    """
    stack = [p]
    for var in range(p.dim - 1, -1, -1):
        stack.append(eliminate(stack[-1], var))
    if stack[-1].is_trivially_empty:
        return NoPoint()

    point: list[Fraction] = []
    for level in reversed(stack[:-1]):
        interval = _last_coordinate_range(level, point)
        if not isinstance(interval, Range):
            raise PolyhedronError(f"back-substitution left no room in {level.render()}")
        point.append(_choose(interval))
    return tuple(point)


def strict_witness(p: Polyhedron, f: LinExpr) -> Point | NoWitness:
    """A point of `p` with `f(x) > 0`, if there is one."""
    match range_of(p, f):
        case EmptyInterval():
            return NoWitness()
        case Range(hi=hi) if hi is not None and hi <= 0:
            return NoWitness()
        case Range(lo=lo, hi=hi):
            target = hi if hi is not None else max(lo or Fraction(0), Fraction(0)) + 1

    fiber = p.with_constraints(Constraint.of(f - LinExpr.constant(p.dim, target), Rel.EQ))
    point = sample_point(fiber)
    if isinstance(point, NoPoint):
        raise PolyhedronError(f"value {target} of {f} not attained on {p.render()}")
    return point


def is_subset(p: Polyhedron, q: Polyhedron) -> bool:
    """Whether every point of `p` satisfies every constraint of `q`."""
    if p.dim != q.dim:
        raise DimensionMismatch(f"dimension {p.dim} vs {q.dim}")
    for c in q.constraints:
        match range_of(p, c.expr):
            case EmptyInterval():
                return True
            case Range(lo=lo, hi=hi):
                if lo is None or lo < 0:
                    return False
                if c.rel is Rel.EQ and (hi is None or hi > 0):
                    return False
    return True
