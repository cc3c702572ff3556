"""Lie presentations, the sorting rewriter, and classical r-matrices.

The rewriter is cross-checked against an independent oracle that inserts
one letter at a time into an already sorted word, so the two never share a
rewrite path.
"""

import itertools
from fractions import Fraction

import pytest

from cotwist import (
    LiePresentation,
    afflie_presentation,
    component_span,
    cybe_residual,
    is_abelian,
    pbw_normalize,
    verify_lie,
)
from cotwist.errors import InputError, NotAntisymmetric
from cotwist.exactlin import rational_array, zeros
from cotwist.fixtures import abelian2_presentation, standard_r
from cotwist.lie_deform import TensorPoly, r_to_tensor, spans_bracket_closed


def so3_presentation():
    b = zeros((3, 3, 3))
    for i, j, k in [(0, 1, 2), (1, 2, 0), (2, 0, 1)]:
        b[i, j, k] = 1
        b[j, i, k] = -1
    return LiePresentation(3, b, ("x", "y", "z"))


def add_terms(out, terms, scale=1):
    for w, c in terms.items():
        value = out.get(w, 0) + scale * c
        if value:
            out[w] = value
        else:
            out.pop(w, None)
    return out


def oracle_insert(lie, letter, word):
    """letter * word with word already sorted, as {sorted word: coeff}.

    letter x y t -> y (x t) + [x, y] t; the recursive calls only ever
    prepend letters that are minimal among those in play, so they bottom
    out immediately on full-length words."""
    if not word or letter <= word[0]:
        return {(letter,) + word: Fraction(1)}
    head, tail = word[0], word[1:]
    out = {}
    for w, c in oracle_insert(lie, letter, tail).items():
        add_terms(out, oracle_insert(lie, head, w), c)
    for k in range(lie.dim):
        coeff = lie.bracket[letter, head, k]
        if coeff:
            add_terms(out, oracle_insert(lie, k, tail), coeff)
    return out


def oracle_expand(lie, word):
    """Straightening of one word by repeated insertion, back to front."""
    if len(word) <= 1:
        return {tuple(word): Fraction(1)}
    out = {}
    for w, c in oracle_expand(lie, word[1:]).items():
        add_terms(out, oracle_insert(lie, word[0], w), c)
    return out


@pytest.mark.parametrize(
    "lie,maxlen",
    [(afflie_presentation(), 4), (so3_presentation(), 3), (abelian2_presentation(), 4)],
    ids=["afflie", "so3", "abelian2"],
)
def test_rewriter_matches_insertion_oracle_on_all_short_words(lie, maxlen):
    for length in range(maxlen + 1):
        for word in itertools.product(range(lie.dim), repeat=length):
            got = pbw_normalize(lie, {word: Fraction(1)})
            assert got == oracle_expand(lie, word), word


def test_rewriter_frozen_examples():
    aff = afflie_presentation()
    assert pbw_normalize(aff, {(1, 0): 1}) == {(0, 1): 1, (1,): -1}
    so3 = so3_presentation()
    assert pbw_normalize(so3, {(2, 1): 1}) == {(1, 2): 1, (0,): -1}


def test_rewriter_is_idempotent_and_linear():
    lie = so3_presentation()
    word_a, word_b = (2, 1, 0), (1, 0, 2)
    norm_a = pbw_normalize(lie, {word_a: Fraction(1)})
    assert pbw_normalize(lie, norm_a) == norm_a
    norm_b = pbw_normalize(lie, {word_b: Fraction(1)})
    combined = pbw_normalize(lie, [(word_a, Fraction(3)), (word_b, Fraction(-2))])
    expected = add_terms(add_terms({}, norm_a, Fraction(3)), norm_b, Fraction(-2))
    assert combined == expected


def test_rewriter_accepts_pairs_and_drops_cancellations():
    lie = afflie_presentation()
    assert pbw_normalize(lie, [((1, 0), 1), ((0, 1), -1)]) == {(1,): -1}
    assert pbw_normalize(lie, {}) == {}


def test_rewriter_rejects_out_of_range_letters():
    with pytest.raises(InputError):
        pbw_normalize(afflie_presentation(), {(0, 5): 1})


def test_verify_lie_on_fixture_presentations():
    for lie in (afflie_presentation(), abelian2_presentation(), so3_presentation()):
        report = verify_lie(lie)
        assert report.passed, [c.name for c in report.failing()]


def test_verify_lie_reports_jacobi_violation():
    b = zeros((3, 3, 3))
    b[0, 1, 0] = 1
    b[1, 0, 0] = -1
    b[1, 2, 1] = 1
    b[2, 1, 1] = -1
    report = verify_lie(LiePresentation(3, b, ("A", "B", "C")))
    assert not report.passed
    assert report["antisymmetric"].passed
    jac = report["jacobi"]
    assert not jac.passed
    assert jac.witness.indices == (0, 1, 2, 0)
    assert (jac.witness.lhs, jac.witness.rhs) == (-1, 0)


def test_verify_lie_reports_antisymmetry_violation():
    b = zeros((2, 2, 2))
    b[0, 1, 1] = 1
    report = verify_lie(LiePresentation(2, b, ("X", "Y")))
    assert not report["antisymmetric"].passed


def test_verify_lie_checks_flagged_subset_is_an_ideal():
    aff = afflie_presentation()
    report = verify_lie(aff)
    assert report["flagged-ideal"].passed
    wrong = LiePresentation(2, aff.bracket.copy(), ("X", "Y"), nilradical=frozenset({0}))
    report = verify_lie(wrong)
    assert not report["flagged-ideal"].passed
    assert report["flagged-ideal"].witness.indices == (1, 0, 1)


def test_presentation_validates_shapes_and_names():
    with pytest.raises(InputError):
        LiePresentation(2, zeros((2, 2)), ("X", "Y"))
    with pytest.raises(InputError):
        LiePresentation(2, zeros((2, 2, 2)), ("X",))
    with pytest.raises(InputError):
        LiePresentation(2, zeros((2, 2, 2)), ("X", "Y"), nilradical=frozenset({5}))
    with pytest.raises(InputError):
        afflie_presentation().name_index("Z")


def test_cybe_residual_vanishes_for_flag_r_matrices():
    assert cybe_residual(afflie_presentation(), standard_r()).is_zero()
    assert cybe_residual(abelian2_presentation(), standard_r()).is_zero()


def test_cybe_residual_detects_failure_on_simple_algebra():
    so3 = so3_presentation()
    r = zeros((3, 3))
    r[0, 1], r[1, 0] = 1, -1
    residual = cybe_residual(so3, r)
    assert not residual.is_zero()
    # the residual is the full antisymmetrization of x (x) y (x) z
    expected = {
        perm: Fraction(sign)
        for perm, sign in [
            ((((0,), (1,), (2,))), 1),
            ((((0,), (2,), (1,))), -1),
            ((((1,), (0,), (2,))), -1),
            ((((1,), (2,), (0,))), 1),
            ((((2,), (0,), (1,))), 1),
            ((((2,), (1,), (0,))), -1),
        ]
    }
    assert residual == TensorPoly.from_terms(so3, 3, expected.items())


def test_cybe_rejects_non_antisymmetric_input():
    with pytest.raises(NotAntisymmetric):
        cybe_residual(afflie_presentation(), rational_array([[0, 1], [1, 0]]))


def test_r_tensor_embedding_slots():
    lie = afflie_presentation()
    r13 = r_to_tensor(lie, standard_r(), slots=3, positions=(0, 2))
    assert r13.terms == {
        ((0,), (), (1,)): Fraction(1),
        ((1,), (), (0,)): Fraction(-1),
    }


def test_component_span_and_abelianness():
    aff = afflie_presentation()
    span = component_span(aff, standard_r())
    assert span.shape == (2, 2)
    assert not is_abelian(aff, span)
    assert spans_bracket_closed(aff, span)

    ab = abelian2_presentation()
    assert is_abelian(ab, component_span(ab, standard_r()))

    empty = component_span(aff, zeros((2, 2)))
    assert empty.shape == (0, 2)
    assert is_abelian(aff, empty)

    so3 = so3_presentation()
    assert not spans_bracket_closed(so3, rational_array([[1, 0, 0], [0, 1, 0]]))
    assert spans_bracket_closed(so3, rational_array([[1, 0, 0]]))
