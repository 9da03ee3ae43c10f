from __future__ import annotations

from collections.abc import Iterator
from fractions import Fraction
from itertools import product
from typing import Final

from attrs import field, frozen

from gpla.polyhedron import Point

DEFAULT_RADIUS: Final = Fraction(3)
DEFAULT_STEP: Final = Fraction(1, 2)


@frozen
class GridOracle:
    """
    Exact membership sampling on the box `[-radius, radius]^d`.

    Sound in one direction only: a thin cell can fall between grid points.
    """

    radius: Fraction = field(default=DEFAULT_RADIUS, converter=Fraction)
    step: Fraction = field(default=DEFAULT_STEP, converter=Fraction)

    @radius.validator
    def _check_radius(self, _: object, value: Fraction) -> None:
        if value < 0:
            raise ValueError(f"grid radius must be nonnegative, got {value}")

    @step.validator
    def _check_step(self, _: object, value: Fraction) -> None:
        if value <= 0:
            raise ValueError(f"grid step must be positive, got {value}")

    def axis(self) -> list[Fraction]:
        values: list[Fraction] = []
        v = -self.radius
        while v <= self.radius:
            values.append(v)
            v += self.step
        return values

    def points(self, dim: int) -> Iterator[Point]:
        return product(self.axis(), repeat=dim)


@frozen
class GridReport:
    both: int
    neither: int
    left_only: tuple[Point, ...]
    right_only: tuple[Point, ...]

    @property
    def agree(self) -> bool:
        return not self.left_only and not self.right_only
