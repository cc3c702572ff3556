"""One-time derivation of the split-product table for the Jordanian twist.

The closed-form Jordanian series multiplies falling factorials of X against
powers of Y, so its h^1 coefficient is X (x) Y.  The split-product normal
form instead starts at r/2; the two differ by a gauge.  This script solves,
degree by degree, the joint linear system

    sum_(s,m) f(s,m) L_(s,m)(r^(x) n)  =  [gauged Jordanian]_n

with both the table weights f(s,m) and the degree-n gauge word coefficients
unknown, then freezes the weights into fixtures/jf_jordanian_table.json and
the normalizing gauge into fixtures/jf_jordanian_gauge.json.  Tests reload
both files and check exactly that the split-product series equals the
gauged closed form and that its residuals vanish; the derivation never
needs to run again, and rerunning it must be byte-stable.

Candidate terms are tried in escalating families: splits keeping each
side's legs in increasing order first, then arbitrary leg orders.  Table
columns come before gauge columns so the solver prefers table weight over
gauge freedom.
"""

import sys
from fractions import Fraction
from itertools import combinations, permutations, product
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from cotwist.errors import NoSolution
from cotwist.exactlin import rational_array, solve_linear, zeros
from cotwist.fixtures import standard_r
from cotwist.lie_deform import (
    GaugeSeries,
    afflie_presentation,
    gauge_transform,
    jf_twist,
    jordanian_twist,
    twist_equation_residual,
)
from cotwist.lie_deform.series import r_to_tensor
from cotwist.lie_deform.tensors import TensorPoly
from cotwist.serialize import canonical_dumps, gauge_to_json, jf_tables_to_json

MAX_DEGREE = 3
FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def term_image(lie, support, perm, split, degree):
    """Split-product term applied to the degree-th tensor power of r."""
    items = []
    for assignment in product(support, repeat=degree):
        legs = []
        value = Fraction(1)
        for i, j, c in assignment:
            legs.extend((i, j))
            value = value * c
        left = tuple(legs[perm[t]] for t in range(split))
        right = tuple(legs[perm[t]] for t in range(split, 2 * degree))
        items.append(((left, right), value))
    return TensorPoly.from_terms(lie, 2, items)


def candidate_families(degree):
    legs = 2 * degree
    ordered = []
    for chosen in combinations(range(legs), degree):
        rest = tuple(t for t in range(legs) if t not in chosen)
        ordered.append((list(chosen + rest), degree))
    yield "ordered-splits", ordered
    yield "all-orders", [
        (list(p), split)
        for split in range(legs + 1)
        for p in permutations(range(legs))
    ]


def gauge_words(lie, degree):
    """Normal-order words X^a Y^b available to the degree-n gauge term."""
    words = []
    for total in range(1, 2 * degree + 1):
        for a in range(total, -1, -1):
            words.append((0,) * a + (1,) * (total - a))
    return words


def coboundary(lie, word):
    """w (x) 1 + 1 (x) w - Delta(w): how a gauge word moves a coefficient."""
    poly = TensorPoly.from_terms(lie, 1, [((word,), Fraction(1))])
    return poly.embed(2, (0,)) + poly.embed(2, (1,)) - poly.coproduct(0)


def solve_degree(lie, support, degree, rhs):
    """Joint solve: table weights (degree >= 2) plus gauge word coefficients.

    Returns (table entries, gauge coefficient poly)."""
    families = list(candidate_families(degree)) if degree >= 2 else [("gauge-only", [])]
    words = gauge_words(lie, degree)
    word_cols = [coboundary(lie, w).scale(Fraction(-1)) for w in words]
    for family, candidates in families:
        seen = {}
        for perm, split in candidates:
            image = term_image(lie, support, perm, split, degree)
            key = tuple(sorted(image.terms.items()))
            if key and key not in seen:
                seen[key] = (perm, split, image)
        kept = list(seen.values())
        columns = [image for _, _, image in kept] + word_cols
        keys = sorted(set(rhs.terms) | {k for col in columns for k in col.terms})
        mat = zeros((len(keys), len(columns)))
        vec = zeros((len(keys),))
        for row, key in enumerate(keys):
            vec[row] = rhs.terms.get(key, Fraction(0))
            for col, image in enumerate(columns):
                mat[row, col] = image.terms.get(key, Fraction(0))
        try:
            solution = solve_linear(mat, vec)
        except NoSolution:
            print(f"degree {degree}: no solution over {family} ({len(kept)} terms)")
            continue
        entries = [
            (perm, split, w)
            for (perm, split, _), w in zip(kept, solution[: len(kept)])
            if w
        ]
        gauge_poly = TensorPoly.from_terms(
            lie,
            1,
            [((w,), c) for w, c in zip(words, solution[len(kept) :]) if c],
        )
        print(f"degree {degree}: solved over {family} with {len(entries)} table terms")
        return entries, gauge_poly
    raise SystemExit(f"degree {degree}: no split-product expression found")


def main():
    lie = afflie_presentation()
    r = rational_array(standard_r())
    support = [
        (i, j, r[i, j]) for i in range(lie.dim) for j in range(lie.dim) if r[i, j]
    ]
    closed_form = jordanian_twist(MAX_DEGREE, lie)
    half_r = r_to_tensor(lie, r).scale(Fraction(1, 2))

    tables = {}
    gauge_coeffs = {0: TensorPoly.one(lie, 1)}
    for degree in range(1, MAX_DEGREE + 1):
        partial = GaugeSeries(lie, MAX_DEGREE, dict(gauge_coeffs))
        gauged = gauge_transform(closed_form, partial)
        rhs = gauged.coeff(degree)
        if degree == 1:
            rhs = rhs - half_r
        entries, gauge_poly = solve_degree(lie, support, degree, rhs)
        if degree >= 2:
            tables[degree] = entries
        if gauge_poly.terms:
            gauge_coeffs[degree] = gauge_poly

    gauge = GaugeSeries(lie, MAX_DEGREE, gauge_coeffs)
    rebuilt = jf_twist(lie, r, tables, MAX_DEGREE)
    if not gauge_transform(closed_form, gauge).equals(rebuilt):
        raise SystemExit("derived table does not reproduce the gauged closed form")
    residual = twist_equation_residual(rebuilt)
    if not residual.passed:
        raise SystemExit("derived table leaves a nonzero residual")
    print("cross-check: table series equals the gauged closed form, residuals zero")

    table_path = FIXTURES / "jf_jordanian_table.json"
    gauge_path = FIXTURES / "jf_jordanian_gauge.json"
    table_path.write_text(canonical_dumps(jf_tables_to_json(tables)))
    gauge_path.write_text(canonical_dumps(gauge_to_json(gauge)))
    print(f"wrote {table_path}")
    print(f"wrote {gauge_path}")
    for degree in sorted(tables):
        for perm, split, w in tables[degree]:
            print(f"  n={degree}  perm={perm}  split={split}  weight={w}")


if __name__ == "__main__":
    main()
