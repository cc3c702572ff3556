"""Truncated deformation twists over finitely presented Lie algebras.

Everything here is graded by powers of the deformation parameter h and
computed exactly: elements of tensor powers of the enveloping algebra are
kept in their sorted (PBW) normal form with rational coefficients, and
series are truncated at a declared order that every operation respects.
"""

from .presentation import LiePresentation, afflie_presentation, pbw_normalize, verify_lie
from .rmatrix import component_span, cybe_residual, is_abelian, r_to_tensor, spans_bracket_closed
from .reps import (
    MatrixPoly,
    RepAssignment,
    UnipotencyResult,
    drinfeld_series,
    drinfeld_u_series,
    evaluate_on_pair,
    evaluate_tensor,
    radical_index,
    unipotency_check,
)
from .series import (
    GaugeSeries,
    ResidualReport,
    TwistSeries,
    exp_twist,
    gauge_transform,
    jf_twist,
    jordanian_twist,
    leading_r,
    r_from_twist,
    twist_equation_residual,
)
from .tensors import TensorPoly

__all__ = [
    "LiePresentation",
    "TensorPoly",
    "TwistSeries",
    "GaugeSeries",
    "RepAssignment",
    "MatrixPoly",
    "ResidualReport",
    "UnipotencyResult",
    "afflie_presentation",
    "verify_lie",
    "pbw_normalize",
    "r_to_tensor",
    "cybe_residual",
    "component_span",
    "is_abelian",
    "spans_bracket_closed",
    "twist_equation_residual",
    "exp_twist",
    "jordanian_twist",
    "jf_twist",
    "leading_r",
    "r_from_twist",
    "gauge_transform",
    "evaluate_tensor",
    "evaluate_on_pair",
    "drinfeld_u_series",
    "drinfeld_series",
    "radical_index",
    "unipotency_check",
]
