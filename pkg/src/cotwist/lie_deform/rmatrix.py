"""Classical r-matrices: antisymmetry, the classical Yang-Baxter equation,
and the span of the components.

An r-matrix is an n x n rational matrix, r[i, j] being the coefficient of
x_i (x) x_j.  The Yang-Baxter residual is computed in the cube of the
enveloping algebra by placing r into two of three legs and summing the
three commutators; an exact zero is the equation.
"""

import numpy as np

from ..errors import NotAntisymmetric
from ..exactlin import in_row_space, row_space_basis, rref
from ..hopf import ein
from .tensors import TensorPoly

__all__ = ["r_to_tensor", "cybe_residual", "component_span", "is_abelian", "spans_bracket_closed"]


def _require_antisymmetric(r):
    n = r.shape[0]
    for i in range(n):
        for j in range(n):
            if r[i, j] != -r[j, i]:
                raise NotAntisymmetric(f"r[{i},{j}] != -r[{j},{i}]")


def r_to_tensor(lie, r, slots=2, positions=(0, 1)):
    """The element sum r[i, j] x_i (x) x_j, optionally embedded into a
    larger tensor power at the given legs."""
    base = TensorPoly.from_terms(
        lie,
        2,
        [(((i,), (j,)), r[i, j]) for i in range(lie.dim) for j in range(lie.dim) if r[i, j]],
    )
    if slots == 2 and positions == (0, 1):
        return base
    return base.embed(slots, positions)


def cybe_residual(lie, r):
    """Residual of the classical Yang-Baxter equation,
    [r12, r13] + [r12, r23] + [r13, r23], in the cube of U(g)."""
    _require_antisymmetric(r)
    r12 = r_to_tensor(lie, r, 3, (0, 1))
    r13 = r_to_tensor(lie, r, 3, (0, 2))
    r23 = r_to_tensor(lie, r, 3, (1, 2))

    def comm(a, b):
        return a * b - b * a

    return comm(r12, r13) + comm(r12, r23) + comm(r13, r23)


def component_span(lie, r):
    """Canonical basis of the subspace of g spanned by the rows and columns
    of r (all first and second components)."""
    stacked = np.concatenate([r, r.T], axis=0)
    return row_space_basis(np.ascontiguousarray(stacked))


def is_abelian(lie, span):
    """Whether all brackets between the given spanning vectors vanish."""
    for u in span:
        for v in span:
            if not all(x == 0 for x in ein("i,j,ijk->k", u, v, lie.bracket)):
                return False
    return True


def spans_bracket_closed(lie, span):
    """Whether the span is closed under the bracket (a subalgebra test)."""
    reduced, pivots = rref(span)
    basis = reduced[: len(pivots)]
    for u in basis:
        for v in basis:
            w = ein("i,j,ijk->k", u, v, lie.bracket)
            if not in_row_space(basis, pivots, w):
                return False
    return True
