"""Exact finite biorthogonal polynomial pairs and identity audits."""

from ._core import (
    ConstraintError,
    DivergentMoment,
    NonConvergence,
    PoleError,
    claim_ids,
    coeffs,
    evaluate,
    fourier_check,
    inner_M,
    laplace,
    verify,
)

__all__ = [
    "ConstraintError",
    "DivergentMoment",
    "NonConvergence",
    "PoleError",
    "claim_ids",
    "coeffs",
    "evaluate",
    "fourier_check",
    "inner_M",
    "laplace",
    "verify",
]
