"""Truncated twist series over an enveloping algebra.

A TwistSeries is 1 (x) 1 plus higher h-degree coefficients in the tensor
square of U(g), truncated at a declared order.  Construction enforces the
unit leading term and counit normalization in both legs at every degree;
the twist equation itself is a separate, reported check.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction

from ..errors import BadCounit, CheckFailed, InputError, NotAbelian
from ..exactlin import is_zero, zeros
from ..reports import AxiomReport, CheckResult, Witness
from .presentation import LiePresentation, afflie_presentation
from .rmatrix import _require_antisymmetric, r_to_tensor
from .tensors import TensorPoly

__all__ = [
    "TwistSeries",
    "GaugeSeries",
    "ResidualReport",
    "twist_equation_residual",
    "exp_twist",
    "jordanian_twist",
    "jf_twist",
    "leading_r",
    "r_from_twist",
    "gauge_transform",
]

_ONE = Fraction(1)


def lies_equal(a, b):
    return a is b or (a.dim == b.dim and (a.bracket == b.bracket).all())


class TwistSeries:
    """Coefficients {h-degree: TensorPoly with two slots}; degree 0 is
    forced to be 1 (x) 1 and every positive degree must vanish under the
    counit in either leg."""

    __slots__ = ("lie", "order", "coeffs", "jf_form")

    def __init__(self, lie, order, coeffs, jf_form=False):
        if order < 0:
            raise InputError("order must be nonnegative")
        self.lie = lie
        self.order = order
        self.coeffs = {d: p for d, p in coeffs.items() if d == 0 or not p.is_zero()}
        self.jf_form = jf_form
        one = TensorPoly.one(lie, 2)
        if self.coeffs.get(0) != one:
            raise BadCounit("degree-0 coefficient must be 1 (x) 1")
        for d, poly in self.coeffs.items():
            if not (0 <= d <= order):
                raise InputError(f"degree {d} outside truncation order {order}")
            if poly.slots != 2:
                raise InputError("twist coefficients need two slots")
            if d >= 1 and not (poly.counit(0).is_zero() and poly.counit(1).is_zero()):
                raise BadCounit(f"degree {d} does not vanish under the counit")

    def coeff(self, d):
        return self.coeffs.get(d, TensorPoly.zero(self.lie, 2))

    def equals(self, other):
        return (
            lies_equal(self.lie, other.lie)
            and self.order == other.order
            and {d: p.terms for d, p in self.coeffs.items()}
            == {d: p.terms for d, p in other.coeffs.items()}
        )


class GaugeSeries:
    """An invertible series 1 + sum h^n g_n with g_n in U(g) and
    counit(g_n) = 0, used to regauge twists."""

    __slots__ = ("lie", "order", "coeffs")

    def __init__(self, lie, order, coeffs):
        self.lie = lie
        self.order = order
        self.coeffs = {d: p for d, p in coeffs.items() if d == 0 or not p.is_zero()}
        if self.coeffs.get(0) != TensorPoly.one(lie, 1):
            raise BadCounit("degree-0 coefficient must be 1")
        for d, poly in self.coeffs.items():
            if not (0 <= d <= order):
                raise InputError(f"degree {d} outside truncation order {order}")
            if poly.slots != 1:
                raise InputError("gauge coefficients need one slot")
            if d >= 1 and not poly.counit(0).is_zero():
                raise BadCounit(f"degree {d} has a nonzero counit")

    def coeff(self, d):
        return self.coeffs.get(d, TensorPoly.zero(self.lie, 1))


def _mul_series(a, b, lie, slots, order):
    out = {}
    for da, pa in a.items():
        if pa.is_zero():
            continue
        for db, pb in b.items():
            d = da + db
            if d > order or pb.is_zero():
                continue
            prod = pa * pb
            if d in out:
                out[d] = out[d] + prod
            else:
                out[d] = prod
    return {d: p for d, p in out.items() if d == 0 or not p.is_zero()}


def _inverse_series(coeffs, lie, slots, order):
    one = TensorPoly.one(lie, slots)
    if coeffs.get(0) != one:
        raise InputError("only series with unit leading term invert")
    inv = {0: one}
    for d in range(1, order + 1):
        acc = TensorPoly.zero(lie, slots)
        for k in range(1, d + 1):
            if k in coeffs:
                acc = acc + coeffs[k] * inv.get(d - k, TensorPoly.zero(lie, slots))
        if not acc.is_zero():
            inv[d] = -acc
    return inv


@dataclass
class ResidualReport:
    residuals: dict
    report: AxiomReport

    @property
    def passed(self):
        return self.report.passed


def twist_equation_residual(j, lie=None):
    """Degree-by-degree residual of the twist equation

        (J x 1) (Delta x I)(J) - (1 x J) (I x Delta)(J)

    in the cube of U(g).  Every degree up to the truncation order must be
    exactly zero for J to be a twist at that order.

    The product order matters once the algebra is noncommutative: the
    factor with the split slot multiplies from the right.  This is the
    orientation the canonical twist of [X, Y] = Y satisfies."""
    if lie is not None and not lies_equal(lie, j.lie):
        raise InputError("series is over a different algebra")
    lie, order = j.lie, j.order
    residuals = {}
    report = AxiomReport()
    for d in range(order + 1):
        lhs = TensorPoly.zero(lie, 3)
        rhs = TensorPoly.zero(lie, 3)
        for a in range(d + 1):
            ja, jb = j.coeff(a), j.coeff(d - a)
            if ja.is_zero() or jb.is_zero():
                continue
            lhs = lhs + jb.embed(3, (0, 1)) * ja.coproduct(0)
            rhs = rhs + jb.embed(3, (1, 2)) * ja.coproduct(1)
        res = lhs - rhs
        residuals[d] = res
        witness = None
        if not res.is_zero():
            key = sorted(res.terms)[0]
            witness = Witness((d, key), res.terms[key], Fraction(0))
        report.add(CheckResult(f"residual-deg-{d}", witness is None, witness))
    return ResidualReport(residuals, report)


def exp_twist(lie, r, order):
    """Exponential twist sum_n (h r / 2)^n / n! for an abelian algebra."""
    if not is_zero(lie.bracket):
        raise NotAbelian("exponential twists need an abelian algebra")
    _require_antisymmetric(r)
    rp = r_to_tensor(lie, r)
    coeffs = {0: TensorPoly.one(lie, 2)}
    power = coeffs[0]
    factorial = 1
    for d in range(1, order + 1):
        power = power * rp
        factorial *= d
        coeffs[d] = power.scale(Fraction(1, 2**d * factorial))
    return TwistSeries(lie, order, coeffs)


def jordanian_twist(order, lie=None):
    """The canonical twist of the algebra [X, Y] = Y: the h^n coefficient
    is the n-th falling factorial of X over n! tensored with Y^n."""
    if lie is None:
        lie = afflie_presentation()
    elif not lies_equal(lie, afflie_presentation()):
        raise InputError("the canonical twist lives over [X, Y] = Y")
    coeffs = {0: TensorPoly.one(lie, 2)}
    falling = TensorPoly.one(lie, 1)
    x = TensorPoly.from_terms(lie, 1, [(((0,),), _ONE)])
    factorial = 1
    for n in range(1, order + 1):
        falling = falling * (x - (n - 1) * TensorPoly.one(lie, 1))
        factorial *= n
        coeffs[n] = TensorPoly.from_terms(
            lie,
            2,
            [((word[0], (1,) * n), coeff / factorial) for word, coeff in falling.terms.items()],
        )
    return TwistSeries(lie, order, coeffs)


def jf_twist(lie, r, tables, order):
    """Twist series in split-product form: 1 + h r / 2 plus, for each
    degree n >= 2, table terms f(s, m) applied to the n-th tensor power of
    r.

    The 2n legs of r^{(x) n} are ordered pairwise, (i_1, j_1, ..., i_n,
    j_n) for r = sum r[i, j] x_i (x) x_j.  A table term (s, m, f) multiplies
    legs s(0), ..., s(m-1) into the left slot and the rest into the right
    slot, both products taken in U(g), scaled by f.
    """
    _require_antisymmetric(r)
    support = [
        (i, j, r[i, j]) for i in range(lie.dim) for j in range(lie.dim) if r[i, j]
    ]
    coeffs = {0: TensorPoly.one(lie, 2)}
    if order >= 1:
        coeffs[1] = r_to_tensor(lie, r).scale(Fraction(1, 2))
    for n in range(2, order + 1):
        items = []
        for perm, split, weight in tables.get(n, []):
            if sorted(perm) != list(range(2 * n)):
                raise InputError(f"table permutation {perm} is not a permutation of 0..{2*n-1}")
            if not (0 <= split <= 2 * n):
                raise InputError(f"table split {split} out of range for degree {n}")
            for assignment in itertools.product(support, repeat=n):
                legs = []
                value = weight
                for i, j, c in assignment:
                    legs.append(i)
                    legs.append(j)
                    value = value * c
                if not value:
                    continue
                left = tuple(legs[perm[t]] for t in range(split))
                right = tuple(legs[perm[t]] for t in range(split, 2 * n))
                items.append(((left, right), value))
        if items:
            coeffs[n] = TensorPoly.from_terms(lie, 2, items)
    return TwistSeries(lie, order, coeffs, jf_form=True)


def leading_r(j):
    """Twice the antisymmetric part of the h^1 coefficient, as an r-matrix.

    For any twist series this part is a sum of single-letter tensors (the
    symmetric rest is a coboundary), so a leftover longer word means the
    input is not a twist and raises InputError."""
    c1 = j.coeff(1)
    doubled = c1 - c1.permute((1, 0))
    r = zeros((j.lie.dim, j.lie.dim))
    for key, coeff in doubled.terms.items():
        left, right = key
        if len(left) != 1 or len(right) != 1:
            raise InputError(f"antisymmetrized degree-1 term {key} is not primitive")
        r[left[0], right[0]] = coeff
    return r


def r_from_twist(j):
    """The triangular series J (J flipped)^{-1}, truncated at the order of
    J.  Its own flip times itself is verified to be 1 (x) 1 through the
    truncation order.

    The factor order matters: with the residual orientation of
    twist_equation_residual, this product is the one that satisfies the
    quantum Yang-Baxter relation degree by degree; the reversed product
    only does so up to h^2."""
    lie, order = j.lie, j.order
    flipped = {d: p.permute((1, 0)) for d, p in j.coeffs.items()}
    rc = _mul_series(j.coeffs, _inverse_series(flipped, lie, 2, order), lie, 2, order)
    rflip = {d: p.permute((1, 0)) for d, p in rc.items()}
    product = _mul_series(rflip, rc, lie, 2, order)
    for d in range(1, order + 1):
        if d in product and not product[d].is_zero():
            raise CheckFailed(
                "flip(R) * R has a nonzero coefficient at degree " + str(d),
                AxiomReport([CheckResult("triangular", False, None)]),
            )
    return TwistSeries(lie, order, rc)


def gauge_transform(j, g):
    """Regauge a twist: J -> (g (x) g) J Delta(g^{-1}).

    Sided to match the residual orientation of twist_equation_residual,
    so regauging preserves a zero residual exactly.  The gauge series
    must have unit leading coefficient and counit-free higher
    coefficients (enforced by GaugeSeries; violations raise BadCounit)."""
    if not lies_equal(j.lie, g.lie):
        raise InputError("gauge and twist live over different algebras")
    lie, order = j.lie, j.order
    ginv = _inverse_series(g.coeffs, lie, 1, order)
    dginv = {d: p.coproduct(0) for d, p in ginv.items()}
    gg = _mul_series(
        {d: p.embed(2, (0,)) for d, p in g.coeffs.items()},
        {d: p.embed(2, (1,)) for d, p in g.coeffs.items()},
        lie,
        2,
        order,
    )
    out = _mul_series(_mul_series(gg, j.coeffs, lie, 2, order), dginv, lie, 2, order)
    return TwistSeries(lie, order, out)
