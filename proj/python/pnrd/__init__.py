"""Exact reduced-norm polynomials, indices and continuous regularity."""

from ._core import (
    Document,
    Error,
    oracle_chi,
    oracle_inertia,
    oracle_regcont,
    poly_sqrt,
    root_profile,
    run,
)

__all__ = [
    "Document",
    "Error",
    "oracle_chi",
    "oracle_inertia",
    "oracle_regcont",
    "poly_sqrt",
    "root_profile",
    "run",
]
