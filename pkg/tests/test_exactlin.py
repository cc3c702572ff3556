"""Property tests for the exact rational linear algebra kernel."""

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cotwist.errors import NoSolution, NotNilpotent
from cotwist.exactlin import (
    eye,
    frac,
    in_row_space,
    is_zero,
    kron,
    matrix_rank,
    nilpotency_index,
    rational_array,
    row_space_basis,
    rref,
    scalar_from_str,
    scalar_to_str,
    solve_linear,
    zeros,
)

rationals = st.fractions(
    min_value=-10, max_value=10, max_denominator=12
)


def matrices(rows, cols):
    return st.lists(
        st.lists(rationals, min_size=cols, max_size=cols),
        min_size=rows,
        max_size=rows,
    ).map(rational_array)


dims = st.integers(min_value=1, max_value=4)


def test_frac_coercions():
    assert frac(3) == Fraction(3)
    assert frac("3/4") == Fraction(3, 4)
    assert frac(Fraction(-2, 6)) == Fraction(-1, 3)


def test_rational_array_exactness():
    a = rational_array([["1/3", 2], [-1, "0"]])
    assert a.dtype == object
    assert a[0, 0] * 3 == 1
    assert is_zero(a - a)


def test_zeros_eye_kron_shapes():
    assert zeros((2, 3)).shape == (2, 3)
    assert np.array_equal(eye(3) @ eye(3), eye(3))
    a = rational_array([[1, 2], [3, 4]])
    k = kron(a, eye(2))
    assert k.shape == (4, 4)
    assert k[2, 2] == 4 and k[2, 0] == 3


@given(rationals)
def test_scalar_str_round_trip(x):
    assert scalar_from_str(scalar_to_str(x)) == x


@given(matrices(3, 4))
@settings(max_examples=60, deadline=None)
def test_rref_idempotent(a):
    reduced, pivots = rref(a)
    again, pivots2 = rref(reduced)
    assert np.array_equal(reduced, again)
    assert pivots == pivots2
    # pivot columns of a reduced matrix are standard basis vectors
    for row, col in enumerate(pivots):
        assert reduced[row, col] == 1
        assert all(reduced[i, col] == 0 for i in range(a.shape[0]) if i != row)


@given(matrices(3, 3), matrices(3, 1))
@settings(max_examples=60, deadline=None)
def test_solve_linear_solves_consistent_systems(a, x0):
    b = a @ x0[:, 0]
    x = solve_linear(a, b)
    assert is_zero(a @ x - b)


def test_solve_linear_rejects_inconsistent():
    a = rational_array([[1, 0], [1, 0]])
    with pytest.raises(NoSolution):
        solve_linear(a, rational_array([0, 1]))


@given(matrices(3, 4))
@settings(max_examples=60, deadline=None)
def test_rank_bounds_and_transpose(a):
    r = matrix_rank(a)
    assert 0 <= r <= 3
    assert matrix_rank(a.T) == r


@given(matrices(2, 2), matrices(2, 2))
@settings(max_examples=60, deadline=None)
def test_rank_of_product_bounded(a, b):
    assert matrix_rank(a @ b) <= min(matrix_rank(a), matrix_rank(b))


@given(matrices(4, 3))
@settings(max_examples=60, deadline=None)
def test_row_space_membership(a):
    basis = row_space_basis(a)
    assert matrix_rank(basis) == len(basis) == matrix_rank(a)
    reduced, pivots = rref(basis) if len(basis) else (basis, [])
    for row in a:
        if len(basis):
            assert in_row_space(reduced, pivots, row)
        else:
            assert is_zero(row)


@given(dims)
def test_nilpotency_of_shift_matrix(n):
    shift = zeros((n, n))
    for i in range(n - 1):
        shift[i, i + 1] = 1
    if n == 1:
        assert nilpotency_index(shift) == 1
    else:
        assert nilpotency_index(shift) == n


def test_nilpotency_rejects_invertible():
    with pytest.raises(NotNilpotent):
        nilpotency_index(eye(2))


def test_scalar_to_str_formats():
    assert scalar_to_str(Fraction(5)) == "5"
    assert scalar_to_str(Fraction(-7, 3)) == "-7/3"
    assert scalar_from_str("-7/3") == Fraction(-7, 3)
