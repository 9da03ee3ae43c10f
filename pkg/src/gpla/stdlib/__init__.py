from __future__ import annotations

from . import macros as macros
from .diode import L_gen, diode_term, geq_from_L, plus_from_vdash, vdash, vdash_from_L
from .exceptions import LayerMismatch, StdlibError, ZeroHyperplane
from .functions import (
    L_from_max,
    abs_term,
    abs_via_relu,
    max_term,
    max_via_relu,
    relu_network,
    relu_term,
    relu_via_abs,
)
from .laws import chains, identities
from .linear import affine_term, hyperplane_term, matrix_term
from .schema import Chain, Identity, Matrix
from .unions import (
    dup_abs,
    dup_n,
    plus_gen,
    plus_n,
    plus_n_direct,
    union_from_plus,
    union_from_plus_split,
    union_gen,
    union_of_effects,
    zero_or_one,
)

__all__ = [
    "Chain",
    "Identity",
    "LayerMismatch",
    "L_from_max",
    "L_gen",
    "Matrix",
    "StdlibError",
    "ZeroHyperplane",
    "abs_term",
    "abs_via_relu",
    "affine_term",
    "chains",
    "diode_term",
    "dup_abs",
    "dup_n",
    "geq_from_L",
    "hyperplane_term",
    "identities",
    "matrix_term",
    "max_term",
    "max_via_relu",
    "plus_from_vdash",
    "plus_gen",
    "plus_n",
    "plus_n_direct",
    "relu_network",
    "relu_term",
    "relu_via_abs",
    "union_from_plus",
    "union_from_plus_split",
    "union_gen",
    "union_of_effects",
    "vdash",
    "vdash_from_L",
    "zero_or_one",
]
