from __future__ import annotations

from collections.abc import Iterable, Sequence
from fractions import Fraction

from attrs import field, frozen

from gpla.polyhedron import DimensionMismatch, Polyhedron
from gpla.term import Arity


@frozen
class PLRelation:
    """
    A finite union of polyhedra relating `arity.left` values to `arity.right` values.

    Coordinates run over the left ports, then the right ports, each top to
    bottom. An empty cell list denotes the empty relation.
    """

    arity: Arity
    polys: tuple[Polyhedron, ...] = field(converter=tuple, default=())

    def __attrs_post_init__(self) -> None:
        for p in self.polys:
            if p.dim != self.dim:
                raise DimensionMismatch(
                    f"cell of dimension {p.dim} in a {self.arity} relation"
                )

    @classmethod
    def of(cls, left: int, right: int, polys: Iterable[Polyhedron] = ()) -> PLRelation:
        return cls(Arity(left, right), tuple(polys))

    @property
    def dim(self) -> int:
        return self.arity.left + self.arity.right

    def __len__(self) -> int:
        return len(self.polys)

    def contains(self, x: Sequence[Fraction]) -> bool:
        if len(x) != self.dim:
            raise DimensionMismatch(f"point of length {len(x)} in dimension {self.dim}")
        return any(p.contains(x) for p in self.polys)
