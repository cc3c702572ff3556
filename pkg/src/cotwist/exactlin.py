"""Dense exact linear algebra over the rationals.

Everything in this package computes with `fractions.Fraction` entries held in
numpy object arrays, so results are exact; numpy.linalg (float only) is never
used.  Conventions fixed here and relied on everywhere else:

* matrices act on column vectors: a map f sends basis vector j to
  sum_i M[i, j] e_i;
* the tensor product basis is flattened in row-major order, so
  index(v_i (x) w_j) = i * dim(W) + j, which is exactly what numpy.kron and
  C-order reshape produce.

Vectors are 1-d arrays, matrices 2-d, structure-constant tensors 3-d or 4-d.
"""

from fractions import Fraction

import numpy as np

from .errors import NoSolution, NotNilpotent

__all__ = [
    "frac",
    "rational_array",
    "zeros",
    "eye",
    "is_zero",
    "kron",
    "solve_linear",
    "rref",
    "matrix_rank",
    "row_space_basis",
    "in_row_space",
    "nilpotency_index",
    "scalar_to_str",
    "scalar_from_str",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def frac(x):
    """Coerce ints, strings like "3/4", and Fractions to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def rational_array(data):
    """Build an object ndarray of Fractions from (nested) lists of scalars."""
    arr = np.array(data, dtype=object)
    flat = arr.reshape(-1)
    for i, x in enumerate(flat):
        flat[i] = frac(x)
    return flat.reshape(arr.shape)


def zeros(shape):
    return np.full(shape, _ZERO, dtype=object)


def eye(n):
    m = zeros((n, n))
    for i in range(n):
        m[i, i] = _ONE
    return m


def is_zero(a):
    return all(x == 0 for x in np.asarray(a, dtype=object).reshape(-1))


def kron(a, b):
    """Tensor product of matrices in the package's flattening convention:
    kron(A, B)[i*rB + k, j*cB + l] = A[i, j] * B[k, l]."""
    return np.kron(a, b)


def rref(a):
    """Reduced row echelon form.  Returns (reduced copy, pivot column list).

    Exact Gauss-Jordan over Fraction entries; rows are never scaled by zero,
    so the result is canonical for the row space.
    """
    m = np.array(a, dtype=object, copy=True)
    if m.ndim != 2:
        raise ValueError("rref needs a 2-d array")
    rows, cols = m.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if m[i, c] != 0), None)
        if p is None:
            continue
        if p != r:
            m[[p, r]] = m[[r, p]]
        m[r] = m[r] * (_ONE / frac(m[r, c]))
        for i in range(rows):
            if i != r and m[i, c] != 0:
                m[i] = m[i] - m[i, c] * m[r]
        pivots.append(c)
        r += 1
    return m, pivots


def matrix_rank(a):
    return len(rref(a)[1])


def row_space_basis(a):
    """Canonical basis (rref nonzero rows) of the row space of `a`."""
    m, pivots = rref(a)
    return m[: len(pivots)]


def in_row_space(basis_rref, pivots, v):
    """Membership test against a basis already in rref form."""
    v = np.array(v, dtype=object, copy=True)
    for row, c in zip(basis_rref, pivots):
        if v[c] != 0:
            v = v - v[c] * row
    return is_zero(v)


def solve_linear(a, b):
    """Solve a x = b exactly.

    Underdetermined systems get the solution with all free variables set to
    zero; inconsistent systems raise NoSolution.  `b` may be a vector or a
    matrix of stacked right-hand-side columns.
    """
    a = np.asarray(a, dtype=object)
    b = np.asarray(b, dtype=object)
    vector_rhs = b.ndim == 1
    rhs = b.reshape(-1, 1) if vector_rhs else b
    if a.shape[0] != rhs.shape[0]:
        raise ValueError("incompatible shapes in solve_linear")
    aug = np.concatenate([a, rhs], axis=1)
    red, pivots = rref(aug)
    n = a.shape[1]
    for r in range(len(pivots)):
        if pivots[r] >= n:
            raise NoSolution("inconsistent linear system")
    # rows beyond the pivot count are identically zero in rref
    x = zeros((n, rhs.shape[1]))
    for r, c in enumerate(pivots):
        x[c] = red[r, n:]
    return x[:, 0] if vector_rhs else x


def nilpotency_index(a):
    """Smallest n >= 1 with a^n = 0, by direct multiplication.

    Raises NotNilpotent when a^dim is nonzero (Cayley-Hamilton makes larger
    exponents pointless).
    """
    a = np.asarray(a, dtype=object)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("nilpotency_index needs a square matrix")
    dim = a.shape[0]
    power = a
    for n in range(1, dim + 1):
        if is_zero(power):
            return n
        power = np.dot(power, a)
    raise NotNilpotent(f"matrix of size {dim} with nonzero power {dim}")


def scalar_to_str(x):
    """Canonical text form: "p" for integers, "p/q" otherwise."""
    x = frac(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def scalar_from_str(s):
    if isinstance(s, str):
        return Fraction(s)
    if isinstance(s, int):
        return Fraction(s)
    raise TypeError(f"expected a rational scalar string, got {s!r}")
