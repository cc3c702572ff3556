"""Shared concrete instances used by the tests, demos, and fixture files.

Everything here is built programmatically from first principles (group
tables, character sums, generator matrices), so the values serialized
into fixtures/ can always be regenerated and cross-checked.
"""

from fractions import Fraction
from itertools import permutations

import numpy as np

from .errors import InputError
from .exactlin import frac, rational_array, zeros
from .hopf import build_group_algebra, dualize, ein
from .comodules import Comodule
from .lie_deform import LiePresentation, afflie_presentation
from .lie_deform.presentation import verify_lie

_HALF = Fraction(1, 2)
_QUARTER = Fraction(1, 4)


def z2_table():
    return [[0, 1], [1, 0]]


def k4_table():
    """Z/2 x Z/2 with index i encoding the pair (i & 1, i >> 1)."""
    return [[i ^ j for j in range(4)] for i in range(4)]


def s3_table():
    """Symmetric group on 3 letters, elements enumerated in a fixed order."""
    elems = sorted(permutations(range(3)))
    index = {p: t for t, p in enumerate(elems)}
    return [
        [index[tuple(p[q[t]] for t in range(3))] for q in elems]
        for p in elems
    ]


def dihedral_table(m):
    """Dihedral group of order 2m with index a + m*b for r^a s^b."""
    def mul(g, h):
        a, b = g % m, g // m
        c, d = h % m, h // m
        return (a + (c if b == 0 else -c)) % m + m * ((b + d) % 2)

    return [[mul(i, j) for j in range(2 * m)] for i in range(2 * m)]


def dihedral_klein_embed(m):
    """Indices of the Klein four-subgroup {e, r^(m/2), s, r^(m/2) s} of the
    dihedral group of order 2m, ordered by the coordinate pair i -> (bit on
    the rotation, bit on the reflection).  Needs m even; the subgroup is
    normal only for m <= 4, which is what makes m = 6 the smallest
    rational instance whose function-algebra twist changes the product."""
    if m % 2:
        raise InputError(f"dihedral group of order {2 * m} has no such subgroup")
    return [0, m // 2, m, m + m // 2]


def kz2():
    return build_group_algebra(z2_table())


def kk4():
    return build_group_algebra(k4_table())


def ks3():
    return build_group_algebra(s3_table())


def oz2():
    return dualize(kz2())


def ok4():
    return dualize(kk4())


def k4_bicharacter():
    """Pair form on the group basis of k[K4]: beta(x, y) = (-1)^(x1 y2)."""
    return rational_array(
        [[(-1) ** ((i & 1) * (j >> 1)) for j in range(4)] for i in range(4)]
    )


def k4_characters():
    """chi_c(g) = (-1)^(c . g) as rows indexed by c."""
    return rational_array(
        [
            [(-1) ** ((c & 1) * (g & 1) + (c >> 1) * (g >> 1)) for g in range(4)]
            for c in range(4)
        ]
    )


def klein_subgroup_cocycle(table, embed, beta=None):
    """Twist element of k[G] x k[G] supported on a Klein four-subgroup,
    assembled from the character idempotents e_c = (1/4) sum_g chi_c(g) g,
    weighted by a bicharacter on the character group; the same matrix read
    as a pair form on the dual is a cocycle for the function algebra.

    embed[i] is the group index of the subgroup element with coordinate
    pair (i & 1, i >> 1); the embedding must respect the subgroup table.
    beta defaults to the nonsymmetric (-1)^(c1 d2)."""
    n = len(table)
    if sorted(set(embed)) != sorted(embed) or any(not 0 <= g < n for g in embed):
        raise InputError("subgroup embedding indices must be distinct and in range")
    if len(embed) != 4:
        raise InputError("subgroup embedding must list four elements")
    for i in range(4):
        for t in range(4):
            if table[embed[i]][embed[t]] != embed[i ^ t]:
                raise InputError(
                    f"embedding does not respect the subgroup law at ({i}, {t})"
                )
    if beta is None:
        beta = k4_bicharacter()
    chi = k4_characters()
    idem = zeros((4, n))
    for c in range(4):
        for i in range(4):
            idem[c, embed[i]] = _QUARTER * chi[c, i]
    return ein("cd,cg,dh->gh", rational_array(beta), idem, idem)


def ok4_cocycle():
    """Twist element of k[K4] x k[K4] assembled from the character
    idempotents e_c = (1/4) sum_g chi_c(g^{-1}) g, weighted by the
    bicharacter; the same matrix read as a pair form on the dual is a
    cocycle there."""
    return klein_subgroup_cocycle(k4_table(), [0, 1, 2, 3])


def oz2_sgn_character():
    """The order-two algebra character of functions on Z/2: evaluation at
    the nontrivial element."""
    return rational_array([0, 1])


def ok4_point_character(g):
    """Evaluation at group element g, as a functional on the dual of
    k[K4]."""
    out = zeros((4,))
    out[g] = frac(1)
    return out


def grouplikes_oz2():
    """Grouplike elements of functions on Z/2 in the delta basis: the
    trivial and sign characters of the group."""
    return {"triv": rational_array([1, 1]), "sgn": rational_array([1, -1])}


def grouplikes_ok4():
    chi = k4_characters()
    return {f"chi{c}": chi[c].copy() for c in range(4)}


def regular_comodule(h):
    """The Hopf algebra coacting on itself by its comultiplication."""
    return Comodule(dim=h.dim, coaction=h.comult.copy())


def grouplike_comodule(h, g):
    """One-dimensional comodule with coaction v -> v (x) g."""
    return Comodule(dim=1, coaction=rational_array(g).reshape(1, 1, h.dim))


def abelian2_presentation():
    bracket = zeros((2, 2, 2))
    lie = LiePresentation(
        dim=2, bracket=bracket, names=("P", "Q"), nilradical=frozenset({0, 1})
    )
    assert verify_lie(lie).passed
    return lie


def standard_r():
    """The antisymmetric element x0 ^ x1 of a two-dimensional algebra."""
    return rational_array([[0, 1], [-1, 0]])


def rep_v2(lie=None):
    from .lie_deform import RepAssignment

    lie = lie if lie is not None else afflie_presentation()
    return RepAssignment(lie, {"X": [[1, 0], [0, 0]], "Y": [[0, 1], [0, 0]]})


def rep_v3(lie=None):
    from .lie_deform import RepAssignment

    lie = lie if lie is not None else afflie_presentation()
    return RepAssignment(
        lie,
        {
            "X": [[2, 0, 0], [0, 1, 0], [0, 0, 0]],
            "Y": [[0, 1, 0], [0, 0, 1], [0, 0, 0]],
        },
    )


def rep_nil3(lie=None):
    from .lie_deform import RepAssignment

    lie = lie if lie is not None else abelian2_presentation()
    return RepAssignment(
        lie,
        {
            "P": [[0, 0, 1], [0, 0, 0], [0, 0, 0]],
            "Q": [[0, 0, 0], [0, 0, 1], [0, 0, 0]],
        },
    )


def rep_diag2(lie=None):
    """Faithful but not flag-nilpotent: evaluation certificates must fail."""
    from .lie_deform import RepAssignment

    lie = lie if lie is not None else abelian2_presentation()
    return RepAssignment(lie, {"P": [[1, 0], [0, 0]], "Q": [[0, 0], [0, 1]]})


def exp_jf_tables(order):
    """Split-product tables whose series is the exponential twist:
    interleaving permutation, split in the middle, weight 1/(2^n n!)."""
    tables = {}
    fact = 1
    for n in range(2, order + 1):
        fact *= n
        perm = [2 * t for t in range(n)] + [2 * t + 1 for t in range(n)]
        tables[n] = [(perm, n, Fraction(1, 2**n * fact))]
    return tables
