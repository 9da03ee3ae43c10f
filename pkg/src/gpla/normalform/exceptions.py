from __future__ import annotations


class NormalFormError(Exception):
    """Base exception for the normalform module."""


class NotRepresentable(NormalFormError):
    """Raised when a polyhedron crosses one of the given hyperplanes."""


class EmptyPolyhedronError(NormalFormError):
    """Raised when a normal form is requested for an empty polyhedron."""


class ZeroHyperplane(NormalFormError, ValueError):
    """Raised when a hyperplane is built from the zero affine map."""


class InternalError(NormalFormError, AssertionError):
    """Raised when an invariant of the normal-form construction is broken."""
