"""Truncated twist series: residuals, split-product tables, gauges, and
the triangular series they generate."""

from fractions import Fraction

import numpy as np
import pytest

from cotwist import (
    GaugeSeries,
    TwistSeries,
    afflie_presentation,
    evaluate_tensor,
    exp_twist,
    gauge_transform,
    jf_twist,
    jordanian_twist,
    leading_r,
    r_from_twist,
    twist_equation_residual,
)
from cotwist import serialize as sz
from cotwist.errors import BadCounit, InputError, NotAbelian
from cotwist.fixtures import (
    abelian2_presentation,
    exp_jf_tables,
    rep_v2,
    rep_v3,
    standard_r,
)
from cotwist.lie_deform import TensorPoly

from conftest import load_fixture

HALF = Fraction(1, 2)


def mul_trunc(a, b, lie, slots, order):
    out = {}
    for da, pa in a.items():
        for db, pb in b.items():
            d = da + db
            if d > order:
                continue
            term = pa * pb
            out[d] = out.get(d, TensorPoly.zero(lie, slots)) + term
    return out


def embedded_legs(series, positions):
    return {d: p.embed(3, positions) for d, p in series.coeffs.items()}


def test_jordanian_twist_has_zero_residual_through_order():
    j = jordanian_twist(4)
    out = twist_equation_residual(j)
    assert out.passed
    assert [c.name for c in out.report.checks] == [f"residual-deg-{d}" for d in range(5)]
    assert sorted(out.residuals) == [0, 1, 2, 3, 4]
    assert all(res.is_zero() for res in out.residuals.values())


def test_jordanian_low_coefficients_are_falling_factorials():
    j = jordanian_twist(2)
    assert j.coeff(1).terms == {((0,), (1,)): 1}
    assert j.coeff(2).terms == {((0,), (1, 1)): -HALF, ((0, 0), (1, 1)): HALF}


def test_truncation_drops_rejected_degrees():
    with pytest.raises(InputError):
        jordanian_twist(-1)
    j = jordanian_twist(0)
    assert j.coeffs == {0: TensorPoly.one(j.lie, 2)}
    assert twist_equation_residual(j).passed


def test_fixture_series_files_match_builders():
    lie = afflie_presentation()
    stored = sz.series_from_json(load_fixture("jordanian.json"), "jordanian", lie=lie)
    assert stored.order == 4
    assert stored.equals(jordanian_twist(4, lie))
    exp_stored = sz.series_from_json(load_fixture("exp_nil.json"), "exp")
    rebuilt = exp_twist(exp_stored.lie, standard_r(), 4)
    assert exp_stored.equals(rebuilt)


def test_leading_r_recovers_the_classical_limit():
    assert np.array_equal(leading_r(jordanian_twist(3)), standard_r())
    ab = abelian2_presentation()
    assert np.array_equal(leading_r(exp_twist(ab, standard_r(), 3)), standard_r())


def test_leading_r_rejects_non_primitive_degree_one():
    lie = afflie_presentation()
    xx_y = TensorPoly.from_terms(lie, 2, [(((0, 0), (1,)), Fraction(1))])
    j = TwistSeries(lie, 1, {0: TensorPoly.one(lie, 2), 1: xx_y})
    with pytest.raises(InputError):
        leading_r(j)


def test_exp_twist_requires_abelian_components():
    with pytest.raises(NotAbelian):
        exp_twist(afflie_presentation(), standard_r(), 3)


def test_exp_twist_residual_and_split_table_form():
    ab = abelian2_presentation()
    j = exp_twist(ab, standard_r(), 4)
    assert twist_equation_residual(j).passed
    tabled = jf_twist(ab, standard_r(), exp_jf_tables(4), 4)
    assert tabled.jf_form
    assert j.equals(tabled)


def test_jf_fixture_tables_reproduce_a_gauged_jordanian_twist():
    j = jordanian_twist(3)
    tables = sz.jf_tables_from_json(load_fixture("jf_jordanian_table.json"), "tables")
    gauge = sz.gauge_from_json(load_fixture("jf_jordanian_gauge.json"), "gauge", lie=j.lie)
    split_form = jf_twist(j.lie, standard_r(), tables, 3)
    assert split_form.jf_form
    # normal form: the degree-1 coefficient is r/2 on the nose
    assert split_form.coeff(1).terms == {((0,), (1,)): HALF, ((1,), (0,)): -HALF}
    assert twist_equation_residual(split_form).passed
    assert split_form.equals(gauge_transform(j, gauge))


def test_jf_tables_are_validated():
    lie = afflie_presentation()
    with pytest.raises(InputError):
        jf_twist(lie, standard_r(), {2: [([0, 1, 1, 3], 1, Fraction(1))]}, 2)
    with pytest.raises(InputError):
        jf_twist(lie, standard_r(), {2: [([0, 1, 2, 3], 5, Fraction(1))]}, 2)


def test_trivial_gauge_is_the_identity():
    j = jordanian_twist(3)
    triv = GaugeSeries(j.lie, 3, {0: TensorPoly.one(j.lie, 1)})
    assert gauge_transform(j, triv).equals(j)


def test_gauging_preserves_zero_residual():
    # degree-1 gauges by primitive elements leave the h^1 coefficient alone,
    # and 1 + hY happens to fix this twist entirely; 1 + hX does not
    j = jordanian_twist(3)
    x = TensorPoly.from_terms(j.lie, 1, [(((0,),), Fraction(1))])
    g = GaugeSeries(j.lie, 3, {0: TensorPoly.one(j.lie, 1), 1: x})
    gauged = gauge_transform(j, g)
    assert not gauged.equals(j)
    assert twist_equation_residual(gauged).passed
    assert np.array_equal(leading_r(gauged), standard_r())


def test_gauge_series_validates_counit_and_leading_term():
    lie = afflie_presentation()
    one = TensorPoly.one(lie, 1)
    with pytest.raises(BadCounit):
        GaugeSeries(lie, 2, {0: one, 1: one})
    with pytest.raises(BadCounit):
        GaugeSeries(lie, 2, {0: one.scale(Fraction(2))})


def test_twist_series_validates_shape_and_counit():
    lie = afflie_presentation()
    one = TensorPoly.one(lie, 2)
    x_y = TensorPoly.from_terms(lie, 2, [(((0,), (1,)), Fraction(1))])
    with pytest.raises(BadCounit):
        TwistSeries(lie, 2, {0: one.scale(Fraction(3))})
    with pytest.raises(BadCounit):
        TwistSeries(lie, 2, {0: one, 1: one + x_y})
    with pytest.raises(InputError):
        TwistSeries(lie, 1, {0: one, 2: x_y})
    with pytest.raises(InputError):
        TwistSeries(lie, 1, {0: one, 1: TensorPoly.from_terms(lie, 3, [(((0,), (1,), ()), Fraction(1))])})


def test_residual_flags_a_truncation_that_stops_too_early():
    j1 = jordanian_twist(1)
    cut = TwistSeries(j1.lie, 2, dict(j1.coeffs))
    out = twist_equation_residual(cut)
    assert not out.passed
    assert out.report["residual-deg-1"].passed
    deg2 = out.report["residual-deg-2"]
    assert not deg2.passed
    assert deg2.witness is not None
    assert not out.residuals[2].is_zero()


def test_triangular_series_from_the_jordanian_twist():
    rt = r_from_twist(jordanian_twist(4))
    assert rt.coeff(1).terms == {((0,), (1,)): 1, ((1,), (0,)): -1}
    assert np.array_equal(leading_r(rt), 2 * standard_r())


def test_triangular_series_from_the_exponential_twist():
    ab = abelian2_presentation()
    rt = r_from_twist(exp_twist(ab, standard_r(), 4))
    # J J21^{-1} = exp(h r/2) twice, so the coefficient of h is all of r
    assert rt.coeff(1).terms == {((0,), (1,)): 1, ((1,), (0,)): -1}


def test_triangular_series_satisfies_qybe_through_truncation_order():
    rt = r_from_twist(jordanian_twist(4))
    lie, order = rt.lie, rt.order
    r12 = embedded_legs(rt, (0, 1))
    r13 = embedded_legs(rt, (0, 2))
    r23 = embedded_legs(rt, (1, 2))
    lhs = mul_trunc(mul_trunc(r12, r13, lie, 3, order), r23, lie, 3, order)
    rhs = mul_trunc(mul_trunc(r23, r13, lie, 3, order), r12, lie, 3, order)
    for d in range(order + 1):
        zero = TensorPoly.zero(lie, 3)
        assert lhs.get(d, zero) == rhs.get(d, zero), d


def test_qybe_holds_exactly_in_a_nilpotent_representation():
    # on a flag representation the evaluated series is an honest matrix
    # polynomial, so both products can be compared with no truncation
    rt = r_from_twist(jordanian_twist(4))
    rep = rep_v2()
    reps = (rep, rep, rep)

    def factor(positions):
        return [
            evaluate_tensor(rt.coeff(d).embed(3, positions), reps)
            for d in range(rt.order + 1)
        ]

    def polymul(a, b):
        shape = a[0].shape
        out = [np.zeros(shape, dtype=object) + Fraction(0) for _ in range(len(a) + len(b) - 1)]
        for i, ma in enumerate(a):
            for j, mb in enumerate(b):
                out[i + j] = out[i + j] + np.dot(ma, mb)
        return out

    r12, r13, r23 = factor((0, 1)), factor((0, 2)), factor((1, 2))
    lhs = polymul(polymul(r12, r13), r23)
    rhs = polymul(polymul(r23, r13), r12)
    assert all(np.array_equal(a, b) for a, b in zip(lhs, rhs))


def test_qybe_on_index_three_triples_through_truncation_order():
    # Y acts with nilpotency index 3 here, so degree-3 slot words like
    # Y (x) Y (x) YY survive evaluation; a wrong factor order in the
    # triangular series is visible on these triples where it is not on
    # index-two ones
    rt = r_from_twist(jordanian_twist(3))
    rep = rep_v3()
    reps = (rep, rep, rep)
    order = rt.order

    def factor(positions):
        return [
            evaluate_tensor(rt.coeff(d).embed(3, positions), reps)
            for d in range(order + 1)
        ]

    def polymul(a, b):
        shape = a[0].shape
        out = [np.zeros(shape, dtype=object) + Fraction(0) for _ in range(order + 1)]
        for i, ma in enumerate(a):
            for j, mb in enumerate(b):
                if i + j <= order:
                    out[i + j] = out[i + j] + np.dot(ma, mb)
        return out

    r12, r13, r23 = factor((0, 1)), factor((0, 2)), factor((1, 2))
    lhs = polymul(polymul(r12, r13), r23)
    rhs = polymul(polymul(r23, r13), r12)
    assert all(np.array_equal(a, b) for a, b in zip(lhs, rhs))
