from __future__ import annotations

from typing import Literal

from attrs import frozen

from gpla.polyhedron import Point


@frozen
class Holds:
    kind: Literal["holds"] = "holds"


@frozen
class Fails:
    """The left relation has a point the right one lacks."""

    counterexample: Point
    kind: Literal["fails"] = "fails"


type Verdict = Holds | Fails
