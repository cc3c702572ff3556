"""Evaluating twist series in finite-dimensional representations.

A truncated series only determines its evaluated image when the degrees
cut off by the truncation are known to act by zero.  The certificate used
here has two halves: every term of the series must carry at least as many
flagged letters as its h-degree, and the flagged generators must act
through a nilpotent ideal.  Together these bound the degrees that can
survive evaluation; anything else raises TruncationTooLow rather than
returning a silently wrong matrix.
"""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ..errors import CheckFailed, InputError, NoSolution, NotNilpotent, TruncationTooLow
from ..exactlin import eye, is_zero, kron, nilpotency_index, rational_array, rref, solve_linear, zeros
from ..reports import AxiomReport, CheckResult
from .series import GaugeSeries, lies_equal, r_from_twist

__all__ = [
    "RepAssignment",
    "MatrixPoly",
    "UnipotencyResult",
    "evaluate_tensor",
    "evaluate_on_pair",
    "drinfeld_u_series",
    "drinfeld_series",
    "radical_index",
    "unipotency_check",
]


class RepAssignment:
    """Square matrices for the generators of a presentation.

    The commutator relations are checked at construction; nilpotency of
    the flagged generators is deliberately not, so that evaluation can
    report a truncation problem instead."""

    __slots__ = ("lie", "dim", "mats", "_words")

    def __init__(self, lie, matrices):
        self.lie = lie
        if isinstance(matrices, dict):
            missing = [name for name in lie.names if name not in matrices]
            if missing:
                raise InputError(f"missing generator matrices: {missing}")
            extra = [name for name in matrices if name not in lie.names]
            if extra:
                raise InputError(f"matrices for unknown generators: {extra}")
            seq = [rational_array(matrices[name]) for name in lie.names]
        else:
            seq = [rational_array(m) for m in matrices]
            if len(seq) != lie.dim:
                raise InputError(f"expected {lie.dim} matrices, got {len(seq)}")
        shapes = {m.shape for m in seq}
        if len(shapes) != 1:
            raise InputError(f"generator matrices differ in shape: {shapes}")
        ((rows, cols),) = shapes
        if rows != cols:
            raise InputError("generator matrices must be square")
        self.dim = rows
        self.mats = seq
        for i in range(lie.dim):
            for j in range(i + 1, lie.dim):
                comm = seq[i].dot(seq[j]) - seq[j].dot(seq[i])
                want = zeros((rows, rows))
                for k in range(lie.dim):
                    if lie.bracket[i, j, k]:
                        want = want + lie.bracket[i, j, k] * seq[k]
                if not is_zero(comm - want):
                    raise InputError(
                        f"matrices break the bracket relation between "
                        f"{lie.names[i]} and {lie.names[j]}"
                    )
        self._words = {(): eye(rows)}

    def word_image(self, word):
        cached = self._words.get(word)
        if cached is None:
            cached = self.word_image(word[:-1]).dot(self.mats[word[-1]])
            self._words[word] = cached
        return cached


class MatrixPoly:
    """A matrix-valued polynomial in h, stored by degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = list(coeffs)
        if not self.coeffs:
            raise InputError("a matrix polynomial needs at least its constant term")

    @property
    def degree(self):
        for d in range(len(self.coeffs) - 1, -1, -1):
            if not is_zero(self.coeffs[d]):
                return d
        return 0

    def coeff(self, d):
        if 0 <= d < len(self.coeffs):
            return self.coeffs[d]
        return zeros(self.coeffs[0].shape)

    def at(self, h0):
        h0 = Fraction(h0)
        out = zeros(self.coeffs[0].shape)
        power = Fraction(1)
        for mat in self.coeffs:
            out = out + power * mat
            power = power * h0
        return out


def evaluate_tensor(poly, reps):
    """Evaluate one tensor polynomial, slot t through reps[t], Kronecker
    products taken left to right."""
    if poly.slots != len(reps):
        raise InputError(f"{poly.slots} slots but {len(reps)} representations")
    for rep in reps:
        if not lies_equal(rep.lie, poly.lie):
            raise InputError("representation is for a different algebra")
    total = 1
    for rep in reps:
        total *= rep.dim
    out = zeros((total, total))
    for key, coeff in poly.terms.items():
        mat = reps[0].word_image(key[0])
        for rep, word in zip(reps[1:], key[1:]):
            mat = kron(mat, rep.word_image(word))
        out = out + coeff * mat
    return out


def _flag_count(lie, key):
    return sum(1 for word in key for letter in word if letter in lie.nilradical)


def _flag_graded(series):
    """True when every term carries at least as many flagged letters as
    its h-degree.  Products, inverses, flips and coproducts of graded
    series stay graded, so the property survives every construction in
    this package that starts from one."""
    for d, poly in series.coeffs.items():
        for key in poly.terms:
            if _flag_count(series.lie, key) < d:
                return False
    return True


def _span_basis(mats, dim):
    if not mats:
        return []
    stacked = np.stack([m.reshape(dim * dim) for m in mats])
    reduced, pivots = rref(stacked)
    return [reduced[t].reshape(dim, dim) for t in range(len(pivots))]


def radical_index(rep):
    """Nilpotency index of the two-sided ideal generated by the flagged
    generator images, inside the algebra generated by the representation.
    Returns None when that ideal is not nilpotent."""
    dim = rep.dim
    algebra = _span_basis([eye(dim)] + list(rep.mats), dim)
    while True:
        grown = _span_basis(
            algebra + [a.dot(b) for a in algebra for b in algebra], dim
        )
        if len(grown) == len(algebra):
            algebra = grown
            break
        algebra = grown
    flagged = [rep.mats[i] for i in sorted(rep.lie.nilradical)]
    ideal = _span_basis(
        [a.dot(f).dot(b) for f in flagged for a in algebra for b in algebra], dim
    )
    index = 1
    power = ideal
    while power:
        if index > dim:
            return None
        power = _span_basis([p.dot(q) for p in power for q in ideal], dim)
        index += 1
    return index


def _certified_cutoff(series, bound):
    if not _flag_graded(series):
        raise TruncationTooLow(
            "series terms are not graded by flagged letters, so the "
            "evaluated truncation cannot be certified"
        )
    if bound is None:
        raise TruncationTooLow(
            "flagged generators act through a non-nilpotent ideal, so no "
            "finite truncation determines the evaluation"
        )
    if series.order < bound:
        raise TruncationTooLow(
            f"truncation order {series.order} is below the certified "
            f"degree bound {bound} for this evaluation"
        )
    return bound


def _assert_bound(coeffs, bound, what):
    for d in range(bound + 1, len(coeffs)):
        if not is_zero(coeffs[d]):
            raise CheckFailed(
                f"{what} exceeds its certified degree bound at degree {d}",
                AxiomReport([CheckResult("degree-bound", False, None)]),
            )


def evaluate_on_pair(series, rep_v, rep_w, h=None):
    """Evaluate a twist series on a pair of representations.

    With radical indices n_V and n_W, graded terms of degree above
    n_V + n_W - 2 evaluate to zero, so that is the certified cutoff; the
    truncation order must reach it.  Returns a MatrixPoly, or its value
    at h when h is given."""
    nv = radical_index(rep_v)
    nw = radical_index(rep_w)
    bound = None if nv is None or nw is None else nv + nw - 2
    cutoff = _certified_cutoff(series, bound)
    coeffs = [
        evaluate_tensor(series.coeff(d), [rep_v, rep_w])
        for d in range(series.order + 1)
    ]
    _assert_bound(coeffs, cutoff, "evaluated twist")
    poly = MatrixPoly(coeffs[: cutoff + 1])
    return poly if h is None else poly.at(h)


def drinfeld_u_series(series):
    """The series with coefficients m(S (x) 1) applied to the flip of the
    triangular structure of the twist."""
    rc = r_from_twist(series)
    coeffs = {
        d: poly.permute((1, 0)).antipode(0).merge(0) for d, poly in rc.coeffs.items()
    }
    return GaugeSeries(series.lie, series.order, coeffs)


def drinfeld_series(series, rep, h=None):
    """Evaluate the Drinfeld element of a twist in one representation.

    Graded terms of degree at or above the radical index n evaluate to
    zero once their slots are merged, so the certified cutoff is n - 1."""
    u = drinfeld_u_series(series)
    n = radical_index(rep)
    cutoff = _certified_cutoff(u, None if n is None else n - 1)
    coeffs = [evaluate_tensor(u.coeff(d), [rep]) for d in range(u.order + 1)]
    _assert_bound(coeffs, cutoff, "evaluated Drinfeld element")
    poly = MatrixPoly(coeffs[: cutoff + 1])
    return poly if h is None else poly.at(h)


@dataclass
class UnipotencyResult:
    report: AxiomReport
    u_index: int | None
    conjugation_index: int | None

    @property
    def passed(self):
        return self.report.passed

    def to_jsonable(self):
        return {
            "report": self.report.to_jsonable(),
            "u_index": self.u_index,
            "conjugation_index": self.conjugation_index,
        }


def unipotency_check(series, rep, h0):
    """Evaluate the Drinfeld element at a sample point and test that it,
    and conjugation by it, are unipotent.

    Reported checks: invertible, unipotent, conjugation-unipotent.  The
    returned indices are the nilpotency indices of u - 1 and of
    Ad(u) - 1, or None for a failed check."""
    u = drinfeld_series(series, rep, h=h0)
    dim = rep.dim
    report = AxiomReport()
    try:
        uinv = solve_linear(u, eye(dim))
    except NoSolution:
        report.add(CheckResult("invertible", False, None))
        report.add(CheckResult("unipotent", False, None))
        report.add(CheckResult("conjugation-unipotent", False, None))
        return UnipotencyResult(report, None, None)
    report.add(CheckResult("invertible", True, None))
    try:
        u_index = nilpotency_index(u - eye(dim))
        report.add(CheckResult("unipotent", True, None))
    except NotNilpotent:
        u_index = None
        report.add(CheckResult("unipotent", False, None))
    conj = kron(u, uinv.T)
    try:
        conj_index = nilpotency_index(conj - eye(dim * dim))
        report.add(CheckResult("conjugation-unipotent", True, None))
    except NotNilpotent:
        conj_index = None
        report.add(CheckResult("conjugation-unipotent", False, None))
    return UnipotencyResult(report, u_index, conj_index)
