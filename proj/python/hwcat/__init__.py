"""Highest weight structures on bound quiver algebras."""

from ._core import (
    SCHEMA_VERSION,
    Document,
    InputError,
    InternalError,
    Outcome,
    PreconditionError,
    bgg,
    check,
    enumerate,
    essential_order,
    ext,
    ext1_jordan,
    fullness,
    indlab,
    k_cokernel_dim,
    reconstruct,
    tilting,
    weyl,
)

__all__ = [
    "SCHEMA_VERSION",
    "Document",
    "InputError",
    "InternalError",
    "Outcome",
    "PreconditionError",
    "bgg",
    "check",
    "enumerate",
    "essential_order",
    "ext",
    "ext1_jordan",
    "fullness",
    "indlab",
    "k_cokernel_dim",
    "reconstruct",
    "tilting",
    "weyl",
]
