from __future__ import annotations

from .builder import (
    add_hyperplane,
    extend_to,
    minimal_valuation,
    pl_nf,
    poly_nf,
    shared_hyperplanes,
    valuations_exhaustive,
)
from .exceptions import (
    EmptyPolyhedronError,
    InternalError,
    NormalFormError,
    NotRepresentable,
    ZeroHyperplane,
)
from .interior import interior_point
from .schema import (
    Cell,
    Hyperplane,
    PLNormalForm,
    Sign,
    Valuation,
    cell_polyhedron,
    render_sign_string,
)

__all__ = [
    "Cell",
    "EmptyPolyhedronError",
    "Hyperplane",
    "InternalError",
    "NormalFormError",
    "NotRepresentable",
    "PLNormalForm",
    "Sign",
    "Valuation",
    "ZeroHyperplane",
    "add_hyperplane",
    "cell_polyhedron",
    "extend_to",
    "interior_point",
    "minimal_valuation",
    "pl_nf",
    "poly_nf",
    "render_sign_string",
    "shared_hyperplanes",
    "valuations_exhaustive",
]
