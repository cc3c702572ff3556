"""Right comodules over a Hopf algebra with a cotriangular pair form.

A comodule is stored as a coaction tensor: coaction[a, b, i] is the
coefficient of v_b (x) e_i in rho(v_a).  All braiding and dimension
computations go through the pair form r; the canonical functional u acts on
a comodule through (I x u) o rho.
"""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import (
    CheckFailed,
    InconsistentSigns,
    InputError,
    NoSolution,
    NotCentral,
    NotGrouplike,
    NotInvolutive,
    NotSemisimpleSigns,
)
from .exactlin import eye, in_row_space, matrix_rank, rref, solve_linear, zeros
from .hopf import _validate_central_grouplike, drinfeld_element, ein
from .reports import AxiomReport, CheckResult, Witness, check_equal, first_mismatch

__all__ = [
    "Comodule",
    "SignSplit",
    "CoefficientCoalgebra",
    "verify_comodule",
    "coefficient_coalgebra",
    "u_action",
    "dual_comodule",
    "braiding",
    "categorical_dimension",
    "sign_split",
    "central_grouplike_from_splits",
]

_HALF = Fraction(1, 2)


@dataclass(eq=False)
class Comodule:
    dim: int
    coaction: np.ndarray

    def __post_init__(self):
        if (
            not isinstance(self.coaction, np.ndarray)
            or self.coaction.ndim != 3
            or self.coaction.shape[:2] != (self.dim, self.dim)
        ):
            raise InputError("coaction must have shape (dim, dim, n)")


@dataclass(eq=False)
class SignSplit:
    """Complementary projectors onto the +1 and -1 eigenspaces of an
    involutive operator."""

    projector_plus: np.ndarray
    projector_minus: np.ndarray

    def __post_init__(self):
        p, q = self.projector_plus, self.projector_minus
        idm = eye(p.shape[0])
        if (
            not np.array_equal(np.dot(p, p), p)
            or not np.array_equal(np.dot(q, q), q)
            or not np.array_equal(p + q, idm)
            or not np.array_equal(np.dot(p, q), zeros(p.shape))
        ):
            raise NotSemisimpleSigns("projectors do not split the space")


@dataclass
class CoefficientCoalgebra:
    """Canonical basis of the coefficient subspace of a comodule together
    with the comultiplication-closure report."""

    basis: np.ndarray
    report: AxiomReport

    @property
    def dim(self):
        return self.basis.shape[0]


def verify_comodule(v, h):
    """Coassociativity and counitality of the coaction."""
    rho = v.coaction
    report = AxiomReport()
    lhs = ein("abi,bcj->acji", rho, rho)
    rhs = ein("acm,mji->acji", rho, h.comult)
    report.add(check_equal("coassociative", lhs, rhs))
    report.add(check_equal("counital", ein("abi,i->ab", rho, h.counit), eye(v.dim)))
    return report


def coefficient_coalgebra(v, h):
    """Span of the matrix coefficients of the coaction, i.e. of all
    (f x I) rho(w) with f a coordinate functional.

    The span is returned as a canonical basis, and every basis vector is
    verified to comultiply into span (x) A intersected with A (x) span.
    """
    rows = v.coaction.reshape(v.dim * v.dim, h.dim)
    reduced, pivots = rref(rows)
    basis = reduced[: len(pivots)]
    witness = None
    for idx in range(len(pivots)):
        image = ein("i,ijk->jk", basis[idx], h.comult)
        for k in range(h.dim):
            if not in_row_space(basis, pivots, image[:, k]):
                witness = Witness((idx, "left-leg", k), Fraction(1), Fraction(0))
                break
        if witness is None:
            for j in range(h.dim):
                if not in_row_space(basis, pivots, image[j, :]):
                    witness = Witness((idx, "right-leg", j), Fraction(1), Fraction(0))
                    break
        if witness is not None:
            break
    report = AxiomReport([CheckResult("comult-closed", witness is None, witness)])
    return CoefficientCoalgebra(basis, report)


def u_action(v, u):
    """Matrix of (I x u) o rho on the comodule, columns indexed by source
    basis vectors."""
    return ein("abi,i->ba", v.coaction, u)


def dual_comodule(v, h):
    """Dual comodule structure on the dual basis, using the antipode:
    rho(f_a) = sum f_b (x) S(e_i) with coefficients taken crosswise."""
    return Comodule(v.dim, ein("bam,jm->abj", v.coaction, h.antipode))


def braiding(v, w, h, r):
    """Braiding V (x) W -> W (x) V, v (x) w -> sum w0 (x) v0 r(v1, w1),
    as a matrix in the global flattening convention."""
    mat = ein("ilp,jkq,pq->klij", v.coaction, w.coaction, r)
    return mat.reshape(w.dim * v.dim, v.dim * w.dim)


def categorical_dimension(v, h, r):
    """Braided trace of the identity.

    Computed as tr of the u-action and, independently, as the scalar of the
    loop k -> V (x) V* -> V* (x) V -> k through the braiding; the two must
    agree, otherwise the slot conventions are broken and CheckFailed is
    raised.
    """
    u = drinfeld_element(h, r)
    by_trace = np.trace(u_action(v, u))

    vdual = dual_comodule(v, h)
    coev = zeros((v.dim * v.dim,))
    evalrow = zeros((v.dim * v.dim,))
    for a in range(v.dim):
        coev[a * v.dim + a] = Fraction(1)
        evalrow[a * v.dim + a] = Fraction(1)
    loop = np.dot(evalrow, np.dot(braiding(v, vdual, h, r), coev))
    if by_trace != loop:
        raise CheckFailed(
            "trace of the u-action disagrees with the braiding loop",
            AxiomReport([CheckResult("dimension-routes", False, Witness((), by_trace, loop))]),
        )
    return by_trace


def sign_split(v, u):
    """Split a comodule along the +1/-1 eigenspaces of the u-action.

    Requires the u-action m to satisfy (m - 1)(m + 1) = 0; anything else
    raises NotSemisimpleSigns."""
    m = u_action(v, u)
    idm = eye(v.dim)
    product = np.dot(m - idm, m + idm)
    w = first_mismatch(product, zeros(m.shape))
    if w is not None:
        raise NotSemisimpleSigns(f"u-action squared is not the identity at {w.indices}")
    return SignSplit(_HALF * (m + idm), _HALF * (idm - m))


def central_grouplike_from_splits(h, signed_comodules):
    """Recover the central grouplike functional c acting as the given sign
    on each comodule.

    `signed_comodules` is a list of (comodule, sign) pairs with sign +1 or
    -1; their coefficient coalgebras must span the algebra (otherwise the
    data cannot determine c and InputError is raised).  A sign pattern that
    does not come from a grouplike of order two violates the tensor product
    rule and raises InconsistentSigns.
    """
    rows = []
    rhs = []
    for v, sign in signed_comodules:
        if sign not in (1, -1):
            raise InputError("signs must be +1 or -1")
        for a in range(v.dim):
            for b in range(v.dim):
                rows.append(v.coaction[a, b, :])
                rhs.append(Fraction(sign) if a == b else Fraction(0))
    system = np.array(rows, dtype=object)
    target = np.array(rhs, dtype=object)
    if matrix_rank(system) < h.dim:
        raise InputError("coefficient coalgebras of the given comodules do not span")
    try:
        c = solve_linear(system, target)
    except NoSolution as exc:
        raise InconsistentSigns("no functional acts by the requested signs") from exc
    try:
        _validate_central_grouplike(h, c)
    except (NotGrouplike, NotCentral, NotInvolutive) as exc:
        raise InconsistentSigns(f"sign pattern violates the tensor rule: {exc}") from exc
    return c
