"""Hopf axioms, duality, and group-algebra construction."""

import numpy as np
import pytest

from conftest import load_fixture
from cotwist import (
    HopfData,
    build_group_algebra,
    dualize,
    iterated_comult,
    verify_hopf,
)
from cotwist.errors import NotAGroup
from cotwist.fixtures import (
    dihedral_table,
    k4_table,
    kk4,
    ks3,
    kz2,
    ok4,
    oz2,
    s3_table,
    z2_table,
)
from cotwist.serialize import hopf_from_json

ALL_HOPF = [kz2, kk4, ks3, oz2, ok4]


@pytest.mark.parametrize("make", ALL_HOPF, ids=lambda f: f.__name__)
def test_fixture_hopf_algebras_verify(make):
    report = verify_hopf(make())
    assert report.passed, [c.name for c in report.failing()]


@pytest.mark.parametrize("make", ALL_HOPF, ids=lambda f: f.__name__)
def test_dual_verifies_and_double_dual_returns(make):
    h = make()
    d = dualize(h)
    assert verify_hopf(d).passed
    dd = dualize(d)
    for field in ("mult", "unit", "comult", "counit", "antipode"):
        assert np.array_equal(getattr(dd, field), getattr(h, field)), field


def test_group_algebra_of_dihedral_group():
    h = build_group_algebra(dihedral_table(4))
    assert h.dim == 8
    assert verify_hopf(h).passed


def test_group_algebra_antipode_is_inversion():
    h = build_group_algebra(s3_table())
    table = s3_table()
    for g in range(6):
        inv = next(k for k in range(6) if table[g][k] == 0)
        col = h.antipode[:, g]
        assert col[inv] == 1 and sum(x != 0 for x in col) == 1


def test_group_algebra_rejects_non_permutation_rows():
    with pytest.raises(NotAGroup):
        build_group_algebra([[0, 1], [0, 1]])


def test_group_algebra_rejects_nonassociative_latin_square():
    # a quasigroup: rows and columns permute, but (1*1)*1 != 1*(1*1)
    with pytest.raises(NotAGroup):
        build_group_algebra([[0, 1, 2], [2, 0, 1], [1, 2, 0]])


def test_iterated_comult_shapes_and_counit_collapse():
    h = oz2()
    three = iterated_comult(h, 3)
    assert three.shape == (2, 2, 2, 2)
    # collapsing the middle leg with the counit recovers the coproduct
    collapsed = np.einsum("aijk,j->aik", three, h.counit)
    assert np.array_equal(collapsed, h.comult)


def test_iterated_comult_degenerate_parts():
    h = kk4()
    assert np.array_equal(iterated_comult(h, 2), h.comult)
    one = iterated_comult(h, 1)
    assert np.array_equal(one, np.asarray(np.eye(4, dtype=int), dtype=object))


@pytest.mark.parametrize(
    "name,make",
    [("kZ2", kz2), ("kK4", kk4), ("kS3", ks3), ("oZ2", oz2), ("oK4", ok4)],
)
def test_fixture_files_match_builders(name, make):
    from_file = hopf_from_json(load_fixture(f"{name}.json"))
    built = make()
    for field in ("mult", "unit", "comult", "counit", "antipode"):
        assert np.array_equal(getattr(from_file, field), getattr(built, field))


def test_function_algebra_is_dual_of_group_algebra():
    for table in (z2_table(), k4_table()):
        group_side = build_group_algebra(table)
        fn_side = dualize(group_side)
        assert verify_hopf(fn_side).passed
        # functions on an abelian group are again a group algebra in the
        # character basis, so both sides have grouplike-diagonal counits
        assert fn_side.counit[0] == 1
        assert np.array_equal(dualize(fn_side).mult, group_side.mult)


def test_hopfdata_is_plain_structure_constants():
    h = kz2()
    assert isinstance(h, HopfData)
    assert h.mult.shape == (2, 2, 2)
    assert h.comult.shape == (2, 2, 2)
    assert h.unit.shape == (2,)
    assert h.counit.shape == (2,)
    assert h.antipode.shape == (2, 2)
