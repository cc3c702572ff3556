"""Comodules, braidings, categorical dimensions, and sign recovery."""

import numpy as np
import pytest

from cotwist import (
    Comodule,
    braiding,
    categorical_dimension,
    central_grouplike_from_splits,
    coefficient_coalgebra,
    convolve,
    drinfeld_element,
    dual_comodule,
    rc_from_central_grouplike,
    sign_split,
    square_carrier,
    u_action,
    verify_comodule,
    verify_cotriangular,
)
from cotwist.errors import InconsistentSigns, InputError, NotSemisimpleSigns
from cotwist.exactlin import eye, matrix_rank, rational_array, zeros
from cotwist.fixtures import (
    grouplike_comodule,
    grouplikes_ok4,
    grouplikes_oz2,
    ok4,
    oz2,
    regular_comodule,
)


def trivial_rform(h):
    r = zeros((h.dim, h.dim))
    r[0, 0] = 1
    return r


def flip_matrix(dv, dw):
    out = zeros((dw * dv, dv * dw))
    for i in range(dv):
        for j in range(dw):
            out[j * dv + i, i * dw + j] = 1
    return out


def oz2_comodules():
    h = oz2()
    g = grouplikes_oz2()
    return h, {
        "triv": grouplike_comodule(h, g["triv"]),
        "sgn": grouplike_comodule(h, g["sgn"]),
        "regular": regular_comodule(h),
    }


def test_fixture_comodules_satisfy_axioms():
    h, mods = oz2_comodules()
    for v in mods.values():
        report = verify_comodule(v, h)
        assert report.passed, [c.name for c in report.failing()]
    h4 = ok4()
    for g in grouplikes_ok4().values():
        assert verify_comodule(grouplike_comodule(h4, g), h4).passed
    assert verify_comodule(regular_comodule(h4), h4).passed


def test_broken_coaction_fails_coassociativity():
    h = oz2()
    v = Comodule(dim=1, coaction=rational_array([1, 0]).reshape(1, 1, 2))
    report = verify_comodule(v, h)
    assert not report["coassociative"].passed
    assert report["counital"].passed


def test_comodule_shape_is_validated():
    with pytest.raises(InputError):
        Comodule(dim=2, coaction=zeros((2, 3, 2)))


def test_coefficient_coalgebra_dimensions():
    h, mods = oz2_comodules()
    cc_sgn = coefficient_coalgebra(mods["sgn"], h)
    assert cc_sgn.report.passed
    assert cc_sgn.dim == 1
    assert np.array_equal(cc_sgn.basis, rational_array([[1, -1]]))
    cc_reg = coefficient_coalgebra(mods["regular"], h)
    assert cc_reg.report.passed
    assert cc_reg.dim == 2
    h4 = ok4()
    assert coefficient_coalgebra(regular_comodule(h4), h4).dim == 4


def test_dual_comodule_is_a_comodule_and_double_dual_returns():
    h, mods = oz2_comodules()
    for v in mods.values():
        vd = dual_comodule(v, h)
        assert verify_comodule(vd, h).passed
        vdd = dual_comodule(vd, h)
        assert np.array_equal(vdd.coaction, v.coaction)


def test_u_action_traces():
    h, mods = oz2_comodules()
    c = rational_array([0, 1])
    u = drinfeld_element(h, rc_from_central_grouplike(h, c))
    assert np.array_equal(u, c)
    assert np.trace(u_action(mods["triv"], u)) == 1
    assert np.trace(u_action(mods["sgn"], u)) == -1
    # on the regular comodule u permutes the delta basis, so the trace is 0
    assert np.array_equal(u_action(mods["regular"], u), rational_array([[0, 1], [1, 0]]))


def test_categorical_dimensions_with_sign_form():
    h, mods = oz2_comodules()
    rc = rc_from_central_grouplike(h, rational_array([0, 1]))
    assert categorical_dimension(mods["triv"], h, rc) == 1
    assert categorical_dimension(mods["sgn"], h, rc) == -1
    assert categorical_dimension(mods["regular"], h, rc) == 0


def test_categorical_dimension_with_trivial_form_is_classical():
    h, mods = oz2_comodules()
    r = trivial_rform(h)
    for v in mods.values():
        assert categorical_dimension(v, h, r) == v.dim


def test_braiding_with_trivial_form_is_the_flip():
    h, mods = oz2_comodules()
    r = trivial_rform(h)
    v, w = mods["regular"], mods["sgn"]
    assert np.array_equal(braiding(v, w, h, r), flip_matrix(v.dim, w.dim))
    assert np.array_equal(braiding(v, v, h, r), flip_matrix(v.dim, v.dim))


@pytest.mark.parametrize("pair", ["regular-sgn", "regular-regular", "sgn-triv"])
def test_braiding_orientations_compose_to_identity(pair):
    h, mods = oz2_comodules()
    rc = rc_from_central_grouplike(h, rational_array([0, 1]))
    left, right = pair.split("-")
    v, w = mods[left], mods[right]
    forward = braiding(v, w, h, rc)
    backward = braiding(w, v, h, rc)
    assert np.array_equal(np.dot(backward, forward), eye(v.dim * w.dim))


def test_sign_split_projectors_on_regular_comodule():
    h, mods = oz2_comodules()
    u = rational_array([0, 1])
    split = sign_split(mods["regular"], u)
    p, q = split.projector_plus, split.projector_minus
    assert matrix_rank(p) == 1 and matrix_rank(q) == 1
    m = u_action(mods["regular"], u)
    assert np.array_equal(np.dot(m, p), p)
    assert np.array_equal(np.dot(m, q), -q)


def test_sign_split_rejects_non_involutive_action():
    h, mods = oz2_comodules()
    with pytest.raises(NotSemisimpleSigns):
        sign_split(mods["regular"], rational_array([1, 1]))


def test_central_grouplike_recovered_from_signs():
    h, mods = oz2_comodules()
    c = central_grouplike_from_splits(h, [(mods["triv"], 1), (mods["sgn"], -1)])
    assert np.array_equal(c, rational_array([0, 1]))
    # the all-plus pattern is realized by the counit
    c0 = central_grouplike_from_splits(h, [(mods["triv"], 1), (mods["sgn"], 1)])
    assert np.array_equal(c0, h.counit)


def test_central_grouplike_rejects_impossible_patterns():
    h, mods = oz2_comodules()
    with pytest.raises(InconsistentSigns):
        central_grouplike_from_splits(h, [(mods["triv"], -1), (mods["sgn"], 1)])
    with pytest.raises(InconsistentSigns):
        central_grouplike_from_splits(h, [(mods["regular"], -1)])
    with pytest.raises(InputError):
        central_grouplike_from_splits(h, [(mods["sgn"], -1)])
    with pytest.raises(InputError):
        central_grouplike_from_splits(h, [(mods["triv"], 2), (mods["sgn"], -1)])


def test_sign_correction_restores_classical_dimensions():
    # with the sign form the one-dimensional sgn comodule has dimension -1;
    # convolving the form with itself replaces u = c by u = eps and every
    # categorical dimension becomes the vector space dimension
    h, mods = oz2_comodules()
    rc = rc_from_central_grouplike(h, rational_array([0, 1]))
    corrected = convolve(rc.ravel(), rc.ravel(), square_carrier(h)).reshape(2, 2)
    assert verify_cotriangular(h, corrected).passed
    assert np.array_equal(drinfeld_element(h, corrected), h.counit)
    for v in mods.values():
        assert categorical_dimension(v, h, corrected) == v.dim
