from __future__ import annotations

import math
from collections.abc import Iterable, Sequence
from enum import StrEnum
from fractions import Fraction

from attrs import field, frozen

from .exceptions import DimensionMismatch, InvalidPermutation

type Rat = Fraction | int | str
type Point = tuple[Fraction, ...]


def as_fractions(values: Iterable[Rat]) -> tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in values)


def check_permutation(perm: Sequence[int], dim: int) -> None:
    if len(perm) != dim or sorted(perm) != list(range(dim)):
        raise InvalidPermutation(f"not a permutation of {dim} coordinates: {perm}")


@frozen
class LinExpr:
    """The affine form `coeffs · x + const`."""

    coeffs: tuple[Fraction, ...] = field(converter=as_fractions)
    const: Fraction = field(default=Fraction(0), converter=Fraction)

    @classmethod
    def var(cls, dim: int, index: int, scale: Rat = 1) -> LinExpr:
        coeffs = [Fraction(0)] * dim
        coeffs[index] = Fraction(scale)
        return cls(coeffs)

    @classmethod
    def constant(cls, dim: int, value: Rat) -> LinExpr:
        return cls([0] * dim, value)

    @property
    def dim(self) -> int:
        return len(self.coeffs)

    @property
    def is_constant(self) -> bool:
        return not any(self.coeffs)

    def __call__(self, x: Sequence[Fraction]) -> Fraction:
        if len(x) != self.dim:
            raise DimensionMismatch(f"point of length {len(x)} in dimension {self.dim}")
        return sum((a * v for a, v in zip(self.coeffs, x, strict=True)), self.const)

    def __neg__(self) -> LinExpr:
        return LinExpr([-a for a in self.coeffs], -self.const)

    def __add__(self, other: LinExpr) -> LinExpr:
        self._check(other)
        coeffs = [a + b for a, b in zip(self.coeffs, other.coeffs, strict=True)]
        return LinExpr(coeffs, self.const + other.const)

    def __sub__(self, other: LinExpr) -> LinExpr:
        return self + (-other)

    def scaled(self, k: Rat) -> LinExpr:
        k = Fraction(k)
        return LinExpr([a * k for a in self.coeffs], self.const * k)

    def drop(self, index: int) -> LinExpr:
        return LinExpr(self.coeffs[:index] + self.coeffs[index + 1 :], self.const)

    def pad(self, before: int, after: int) -> LinExpr:
        zero = (Fraction(0),)
        return LinExpr(zero * before + self.coeffs + zero * after, self.const)

    def permuted(self, perm: Sequence[int]) -> LinExpr:
        """Move coordinate `i` to position `perm[i]`."""
        check_permutation(perm, self.dim)
        coeffs = [Fraction(0)] * self.dim
        for old, new in enumerate(perm):
            coeffs[new] = self.coeffs[old]
        return LinExpr(coeffs, self.const)

    def _check(self, other: LinExpr) -> None:
        if other.dim != self.dim:
            raise DimensionMismatch(f"dimension {self.dim} vs {other.dim}")

    def render(self, names: Sequence[str] | None = None) -> str:
        names = names or [f"x{i}" for i in range(self.dim)]
        parts: list[str] = []
        for a, name in zip(self.coeffs, names, strict=True):
            if a == 0:
                continue
            sign = "-" if a < 0 else "+"
            mag = abs(a)
            term = name if mag == 1 else f"{mag}*{name}"
            parts.append(f"{sign} {term}")
        if self.const != 0 or not parts:
            sign = "-" if self.const < 0 else "+"
            parts.append(f"{sign} {abs(self.const)}")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __str__(self) -> str:
        return self.render()


def primitive(expr: LinExpr) -> LinExpr:
    """
    Rescale by a positive factor so the coefficients are coprime integers.

    Constant expressions are returned unchanged.
    """
    if expr.is_constant:
        return expr
    lcm = math.lcm(*(a.denominator for a in expr.coeffs))
    ints = [int(a * lcm) for a in expr.coeffs]
    gcd = math.gcd(*ints)
    return expr.scaled(Fraction(lcm, gcd))


def leading_positive(coeffs: Sequence[Fraction]) -> bool:
    return next((a > 0 for a in coeffs if a != 0), False)


class Rel(StrEnum):
    GE = "ge"
    EQ = "eq"


@frozen
class Constraint:
    """
    `expr >= 0` or `expr = 0`, stored normalized.

    Use `Constraint.of` to build one; it normalizes and returns `None` for the
    trivially true constraint.
    """

    expr: LinExpr
    rel: Rel = Rel.GE

    @classmethod
    def of(cls, expr: LinExpr, rel: Rel = Rel.GE) -> Constraint | None:
        if expr.is_constant:
            holds = expr.const >= 0 if rel is Rel.GE else expr.const == 0
            return None if holds else cls.contradiction(expr.dim)

        expr = primitive(expr)
        if rel is Rel.EQ and not leading_positive(expr.coeffs):
            expr = -expr
        return cls(expr, rel)

    @classmethod
    def contradiction(cls, dim: int) -> Constraint:
        return cls(LinExpr.constant(dim, -1), Rel.GE)

    @property
    def dim(self) -> int:
        return self.expr.dim

    @property
    def is_contradiction(self) -> bool:
        return self.expr.is_constant

    def holds(self, x: Sequence[Fraction]) -> bool:
        value = self.expr(x)
        return value >= 0 if self.rel is Rel.GE else value == 0

    def render(self, names: Sequence[str] | None = None) -> str:
        op = ">=" if self.rel is Rel.GE else "="
        return f"{self.expr.render(names)} {op} 0"

    def __str__(self) -> str:
        return self.render()


def _simplify(dim: int, constraints: Iterable[Constraint | None]) -> tuple[Constraint, ...]:
    contradiction = (Constraint.contradiction(dim),)
    eqs: dict[tuple[Fraction, ...], Fraction] = {}
    ges: dict[tuple[Fraction, ...], Fraction] = {}

    for c in constraints:
        if c is None:
            continue
        if c.dim != dim:
            raise DimensionMismatch(f"constraint of dimension {c.dim} in dimension {dim}")
        if c.is_contradiction:
            return contradiction
        key, const = c.expr.coeffs, c.expr.const
        if c.rel is Rel.EQ:
            if eqs.get(key, const) != const:
                return contradiction
            eqs[key] = const
        else:
            ges[key] = min(ges.get(key, const), const)

    # opposite inequalities pinch to an equality or to nothing
    for key in [k for k in ges if leading_positive(k)]:
        neg = tuple(-a for a in key)
        if neg not in ges:
            continue
        total = ges[key] + ges[neg]
        if total < 0:
            return contradiction
        if total == 0:
            const = ges.pop(key)
            del ges[neg]
            if eqs.get(key, const) != const:
                return contradiction
            eqs[key] = const

    # inequalities along an equality's direction are decided by it
    for key, const in list(ges.items()):
        neg = tuple(-a for a in key)
        if key in eqs:
            if const < eqs[key]:
                return contradiction
            del ges[key]
        elif neg in eqs:
            if eqs[neg] + const < 0:
                return contradiction
            del ges[key]

    return tuple(
        [Constraint(LinExpr(k, b), Rel.EQ) for k, b in eqs.items()]
        + [Constraint(LinExpr(k, b), Rel.GE) for k, b in ges.items()]
    )


@frozen
class Polyhedron:
    """
    A closed convex set `{x ∈ ℚ^dim | all constraints hold}`.

    Build through `Polyhedron.of` so constraints are normalized and deduplicated;
    an infeasible row set collapses to the single row `-1 >= 0`.
    """

    dim: int
    constraints: tuple[Constraint, ...] = ()

    @classmethod
    def of(cls, dim: int, constraints: Iterable[Constraint | None]) -> Polyhedron:
        return cls(dim, _simplify(dim, constraints))

    @classmethod
    def full(cls, dim: int) -> Polyhedron:
        return cls(dim)

    @classmethod
    def build(
        cls,
        dim: int,
        ge: Iterable[Sequence[Rat]] = (),
        eq: Iterable[Sequence[Rat]] = (),
    ) -> Polyhedron:
        """Build from rows `(a_0, ..., a_{dim-1}, b)` meaning `a·x + b ⋈ 0`."""

        def row(values: Sequence[Rat], rel: Rel) -> Constraint | None:
            if len(values) != dim + 1:
                raise DimensionMismatch(f"row of length {len(values)} in dimension {dim}")
            return Constraint.of(LinExpr(values[:-1], values[-1]), rel)

        rows = [row(r, Rel.GE) for r in ge] + [row(r, Rel.EQ) for r in eq]
        return cls.of(dim, rows)

    @property
    def is_trivially_empty(self) -> bool:
        return any(c.is_contradiction for c in self.constraints)

    def contains(self, x: Sequence[Fraction]) -> bool:
        if len(x) != self.dim:
            raise DimensionMismatch(f"point of length {len(x)} in dimension {self.dim}")
        return all(c.holds(x) for c in self.constraints)

    def with_constraints(self, *constraints: Constraint | None) -> Polyhedron:
        return Polyhedron.of(self.dim, [*self.constraints, *constraints])

    def intersect(self, other: Polyhedron) -> Polyhedron:
        if other.dim != self.dim:
            raise DimensionMismatch(f"dimension {self.dim} vs {other.dim}")
        return self.with_constraints(*other.constraints)

    def direct_sum(self, other: Polyhedron) -> Polyhedron:
        left = [
            Constraint(c.expr.pad(0, other.dim), c.rel) for c in self.constraints
        ]
        right = [
            Constraint(c.expr.pad(self.dim, 0), c.rel) for c in other.constraints
        ]
        return Polyhedron.of(self.dim + other.dim, left + right)

    def pad(self, before: int, after: int) -> Polyhedron:
        """Embed in a larger space with unconstrained coordinates around it."""
        rows = [Constraint(c.expr.pad(before, after), c.rel) for c in self.constraints]
        return Polyhedron(before + self.dim + after, tuple(rows))

    def reindex(self, perm: Sequence[int]) -> Polyhedron:
        """Move coordinate `i` to position `perm[i]`."""
        check_permutation(perm, self.dim)
        rows = [Constraint.of(c.expr.permuted(perm), c.rel) for c in self.constraints]
        return Polyhedron.of(self.dim, rows)

    def render(self, names: Sequence[str] | None = None) -> str:
        if not self.constraints:
            return "{}"
        return "{" + ", ".join(c.render(names) for c in self.constraints) + "}"


def intersect(p: Polyhedron, q: Polyhedron) -> Polyhedron:
    return p.intersect(q)


def direct_sum(p: Polyhedron, q: Polyhedron) -> Polyhedron:
    return p.direct_sum(q)


def reindex(p: Polyhedron, perm: Sequence[int]) -> Polyhedron:
    return p.reindex(perm)


@frozen
class EmptyInterval:
    """The image of an empty polyhedron."""


@frozen
class Range:
    """A closed interval; `None` stands for an infinite endpoint."""

    lo: Fraction | None = None
    hi: Fraction | None = None

    def contains(self, value: Fraction) -> bool:
        return (self.lo is None or self.lo <= value) and (
            self.hi is None or value <= self.hi
        )

    def __str__(self) -> str:
        lo = "-inf" if self.lo is None else str(self.lo)
        hi = "+inf" if self.hi is None else str(self.hi)
        return f"[{lo}, {hi}]"


type Interval = EmptyInterval | Range


@frozen
class NoPoint:
    """The polyhedron is empty."""


@frozen
class NoWitness:
    """No point of the polyhedron makes the form strictly positive."""
