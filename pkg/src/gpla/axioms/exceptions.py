from __future__ import annotations


class AxiomError(Exception):
    """Base exception for the axioms module."""
