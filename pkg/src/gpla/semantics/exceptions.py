from __future__ import annotations


class SemanticsError(Exception):
    """Base exception for the semantics module."""


class ArityMismatch(SemanticsError, ValueError):
    """Raised when relations are combined across incompatible boundaries."""
