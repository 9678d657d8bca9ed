"""Explicit B_k sequences built from discrete logarithms in smooth-order groups."""

from .constructions import (
    BkSequence,
    compute_r,
    construct,
    construct_bose_chowla,
    construct_geometric,
    construct_pow2,
    construct_pow3,
)
from .errors import (
    BkError,
    InconsistencyError,
    InstanceTooLarge,
    InvalidInput,
    InvalidParameter,
    NotInvertible,
)
from .verify import DensityReport, VerificationReport, density_report, verify_bk

__all__ = [
    "BkSequence",
    "compute_r",
    "construct",
    "construct_bose_chowla",
    "construct_geometric",
    "construct_pow2",
    "construct_pow3",
    "BkError",
    "InconsistencyError",
    "InstanceTooLarge",
    "InvalidInput",
    "InvalidParameter",
    "NotInvertible",
    "DensityReport",
    "VerificationReport",
    "density_report",
    "verify_bk",
]
