"""Exact constructions and checks for twists of Hopf algebra data.

Everything computes over the rationals: structure constants are arrays of
Fraction scalars, every reported identity is an exact equality, and every
failure carries a witness entry."""

from .comodules import (
    CoefficientCoalgebra,
    Comodule,
    SignSplit,
    braiding,
    categorical_dimension,
    central_grouplike_from_splits,
    coefficient_coalgebra,
    dual_comodule,
    sign_split,
    u_action,
    verify_comodule,
)
from .errors import (
    BadCounit,
    CheckFailed,
    CotwistError,
    InconsistentSigns,
    InputError,
    NoSolution,
    NotAbelian,
    NotAGroup,
    NotAntisymmetric,
    NotASubcoalgebra,
    NotCentral,
    NotGrouplike,
    NotInvertible,
    NotInvolutive,
    NotNilpotent,
    NotSemisimpleSigns,
    TruncationTooLow,
)
from .exactlin import rational_array
from .hopf import (
    Carrier,
    HopfData,
    RankResult,
    TransportResult,
    algebra_carrier,
    build_group_algebra,
    cocycle_transport,
    convolution_inverse,
    convolve,
    drinfeld_element,
    dualize,
    is_hopf_2cocycle,
    iterated_comult,
    pseudoinvolutivity_check,
    rc_from_central_grouplike,
    rform_rank,
    square_carrier,
    twist,
    twisted_function_mult,
    twist_element_check,
    twist_rform,
    verify_cotriangular,
    verify_hopf,
    verify_s2_conjugation,
)
from .lie_deform import (
    GaugeSeries,
    LiePresentation,
    MatrixPoly,
    RepAssignment,
    ResidualReport,
    TensorPoly,
    TwistSeries,
    UnipotencyResult,
    afflie_presentation,
    component_span,
    cybe_residual,
    drinfeld_series,
    drinfeld_u_series,
    evaluate_on_pair,
    evaluate_tensor,
    exp_twist,
    gauge_transform,
    is_abelian,
    jf_twist,
    jordanian_twist,
    leading_r,
    pbw_normalize,
    r_from_twist,
    radical_index,
    twist_equation_residual,
    unipotency_check,
    verify_lie,
)
from .reports import AxiomReport, CheckResult, Witness

__version__ = "0.1.0"

__all__ = [
    "afflie_presentation",
    "algebra_carrier",
    "AxiomReport",
    "BadCounit",
    "braiding",
    "build_group_algebra",
    "Carrier",
    "categorical_dimension",
    "central_grouplike_from_splits",
    "CheckFailed",
    "CheckResult",
    "cocycle_transport",
    "coefficient_coalgebra",
    "CoefficientCoalgebra",
    "Comodule",
    "component_span",
    "convolution_inverse",
    "convolve",
    "CotwistError",
    "cybe_residual",
    "drinfeld_element",
    "drinfeld_series",
    "drinfeld_u_series",
    "dual_comodule",
    "dualize",
    "evaluate_on_pair",
    "evaluate_tensor",
    "exp_twist",
    "gauge_transform",
    "GaugeSeries",
    "HopfData",
    "InconsistentSigns",
    "InputError",
    "is_abelian",
    "is_hopf_2cocycle",
    "iterated_comult",
    "jf_twist",
    "jordanian_twist",
    "leading_r",
    "LiePresentation",
    "MatrixPoly",
    "NoSolution",
    "NotAbelian",
    "NotAGroup",
    "NotAntisymmetric",
    "NotASubcoalgebra",
    "NotCentral",
    "NotGrouplike",
    "NotInvertible",
    "NotInvolutive",
    "NotNilpotent",
    "NotSemisimpleSigns",
    "pbw_normalize",
    "pseudoinvolutivity_check",
    "r_from_twist",
    "radical_index",
    "RankResult",
    "rational_array",
    "rc_from_central_grouplike",
    "RepAssignment",
    "ResidualReport",
    "rform_rank",
    "sign_split",
    "SignSplit",
    "square_carrier",
    "TensorPoly",
    "TransportResult",
    "TruncationTooLow",
    "twist",
    "twist_element_check",
    "twist_equation_residual",
    "twist_rform",
    "twisted_function_mult",
    "TwistSeries",
    "u_action",
    "unipotency_check",
    "UnipotencyResult",
    "verify_comodule",
    "verify_cotriangular",
    "verify_hopf",
    "verify_lie",
    "verify_s2_conjugation",
    "Witness",
]
