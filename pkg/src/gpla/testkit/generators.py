from __future__ import annotations

import random
from fractions import Fraction
from typing import Final

from gpla.polyhedron import Constraint, LinExpr, Polyhedron, Rel
from gpla.term import (
    SCALAR_TAGS,
    SWAP,
    GenTag,
    Id,
    Term,
    gen,
    par,
    seq,
    union,
)

_SCALARS: Final = (Fraction(2), Fraction(-1), Fraction(1, 2), Fraction(-3), Fraction(0))


def _random_gen(rng: random.Random) -> Term:
    tag = rng.choice(list(GenTag))
    if tag in SCALAR_TAGS:
        return gen(tag, rng.choice(_SCALARS))
    return gen(tag)


def _branch(
    rng: random.Random, left: int, target: int, max_width: int, budget: int
) -> Term:
    """
    Stack random generator layers on `left` wires, ending on `target` wires.

    The width never exceeds `max_width`. The result is padded with
    `del`/`codel` to exactly `target` outputs; the padding counts in `budget`.
    """
    layers: list[Term] = [Id(left)]
    width, used = left, 0

    def room(w: int) -> bool:
        return used + 1 + abs(w - target) <= budget

    for _ in range(2 * budget):
        if width >= 2 and rng.random() < 0.2:
            k = rng.randrange(width - 1)
            layers.append(par(Id(k), SWAP, Id(width - k - 2)))
            continue

        g = _random_gen(rng)
        a, b = g.arity
        after = width - a + b
        if a > width or after > max_width or not room(after):
            continue
        k = rng.randrange(width - a + 1)
        layers.append(par(Id(k), g, Id(width - a - k)))
        width, used = after, used + 1

    if width > target:
        layers.append(par(Id(target), *[gen(GenTag.DEL)] * (width - target)))
    elif width < target:
        layers.append(par(Id(width), *[gen(GenTag.CODEL)] * (target - width)))
    return seq(*layers)


def random_term(
    seed: int, max_gens: int = 8, max_arity: int = 3, max_unions: int = 2
) -> Term:
    """
    A well-typed term, deterministic in `seed`.

    At most `max_gens` generators, left plus right arity at most `max_arity`,
    and at most `max_unions` unions.
    """
    if max_gens < 0 or max_arity < 0 or max_unions < 0:
        raise ValueError("random_term bounds must be nonnegative")

    rng = random.Random(seed)
    unions = rng.randint(0, max_unions)
    budget = max_gens // (unions + 1)
    # every branch must be able to pad from `left` to `right` within its budget
    arities = [
        (left, right)
        for left in range(max_arity + 1)
        for right in range(max_arity - left + 1)
        if abs(left - right) <= budget
    ]
    left, right = rng.choice(arities)

    branches = [
        _branch(rng, left, right, max_arity, budget) for _ in range(unions + 1)
    ]
    return union(*branches)


def random_polyhedron(
    seed: int, dim: int, rows: int = 3, bound: int = 2, eq_rate: float = 0.2
) -> Polyhedron:
    """Rows with integer coefficients in `[-bound, bound]`, constants in `[-2·bound, 2·bound]`."""
    rng = random.Random(seed)
    constraints: list[Constraint | None] = []
    for _ in range(rows):
        expr = LinExpr(
            [rng.randint(-bound, bound) for _ in range(dim)],
            rng.randint(-2 * bound, 2 * bound),
        )
        rel = Rel.EQ if rng.random() < eq_rate else Rel.GE
        constraints.append(Constraint.of(expr, rel))
    return Polyhedron.of(dim, constraints)
