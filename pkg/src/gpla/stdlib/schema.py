from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction
from typing import Self

from attrs import field, frozen

from gpla.polyhedron.schema import Rat, as_fractions
from gpla.term import Term


@frozen
class Matrix:
    """A `rows × cols` rational matrix, entries stored row-major."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...] = field(converter=as_fractions)

    def __attrs_post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0 or len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{len(self.entries)} entries do not fill a {self.rows}x{self.cols} matrix"
            )

    @classmethod
    def of(cls, rows: Sequence[Sequence[Rat]], cols: int | None = None) -> Self:
        widths = {len(r) for r in rows}
        if len(widths) > 1:
            raise ValueError(f"ragged rows of widths {sorted(widths)}")
        width = widths.pop() if widths else (cols or 0)
        return cls(len(rows), width, [v for r in rows for v in r])

    @classmethod
    def identity(cls, n: int) -> Self:
        return cls(n, n, [int(i == j) for i in range(n) for j in range(n)])

    def __getitem__(self, index: tuple[int, int]) -> Fraction:
        i, j = index
        return self.entries[i * self.cols + j]

    def apply(self, x: Sequence[Fraction]) -> tuple[Fraction, ...]:
        return tuple(
            sum((self[i, j] * x[j] for j in range(self.cols)), Fraction(0))
            for i in range(self.rows)
        )


@frozen
class Identity:
    """Two terms claimed to denote the same relation."""

    name: str
    lhs: Term
    rhs: Term


@frozen
class Chain:
    """A displayed derivation: every step denotes the same relation as the next."""

    name: str
    steps: tuple[Term, ...] = field(converter=tuple)
