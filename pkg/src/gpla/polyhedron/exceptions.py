from __future__ import annotations


class PolyhedronError(Exception):
    """Base exception for the polyhedron module."""


class DimensionMismatch(PolyhedronError, ValueError):
    """Raised when operands live in spaces of different dimension."""


class InvalidPermutation(PolyhedronError, ValueError):
    """Raised when a coordinate permutation is not a bijection."""
