from __future__ import annotations

from gpla.normalform import ZeroHyperplane
from gpla.polyhedron import DimensionMismatch


class StdlibError(Exception):
    """Base exception for the stdlib module."""


class LayerMismatch(StdlibError, DimensionMismatch):
    """Raised when consecutive network layers or a bias vector do not fit."""


__all__ = ["LayerMismatch", "StdlibError", "ZeroHyperplane"]
