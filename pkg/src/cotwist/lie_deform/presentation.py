"""Lie algebras by structure constants, and the sorting rewriter for their
enveloping algebras.

bracket[i, j, k] is the coefficient of x_k in [x_i, x_j].  Words in the
enveloping algebra are tuples of basis indices; the normal form keeps them
weakly increasing, rewriting x_j x_i -> x_i x_j + [x_j, x_i] whenever j > i.
Each presentation carries its own rewrite cache, so repeated normalization
of the same word costs one dictionary lookup.
"""

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from ..errors import InputError
from ..hopf import ein
from ..reports import AxiomReport, CheckResult, Witness, check_equal
from ..exactlin import zeros

__all__ = ["LiePresentation", "afflie_presentation", "normalize_word", "pbw_normalize", "verify_lie"]

_ONE = Fraction(1)


@dataclass(eq=False)
class LiePresentation:
    dim: int
    bracket: np.ndarray
    names: tuple
    nilradical: frozenset = frozenset()
    _rewrite_cache: dict = field(default_factory=dict, init=False, repr=False)

    def __post_init__(self):
        n = self.dim
        if not isinstance(self.bracket, np.ndarray) or self.bracket.shape != (n, n, n):
            raise InputError("bracket must have shape (dim, dim, dim)")
        self.names = tuple(self.names)
        if len(self.names) != n:
            raise InputError("need one name per basis element")
        self.nilradical = frozenset(self.nilradical)
        if any(not (0 <= i < n) for i in self.nilradical):
            raise InputError("nilradical indices out of range")

    def name_index(self, name):
        try:
            return self.names.index(name)
        except ValueError:
            raise InputError(f"unknown generator name {name!r}") from None


def afflie_presentation():
    """The two-dimensional nonabelian Lie algebra [X, Y] = Y, with Y
    spanning the flagged nilpotent ideal."""
    bracket = zeros((2, 2, 2))
    bracket[0, 1, 1] = _ONE
    bracket[1, 0, 1] = -_ONE
    return LiePresentation(2, bracket, ("X", "Y"), frozenset({1}))


def verify_lie(lie):
    """Antisymmetry, the Jacobi identity, and closure of the flagged
    subset under bracketing with the whole algebra."""
    c = lie.bracket
    report = AxiomReport()
    report.add(check_equal("antisymmetric", c, -c.transpose(1, 0, 2)))
    jac = (
        ein("ijm,mkl->ijkl", c, c)
        + ein("jkm,mil->ijkl", c, c)
        + ein("kim,mjl->ijkl", c, c)
    )
    report.add(check_equal("jacobi", jac, zeros(jac.shape)))
    witness = None
    for j in sorted(lie.nilradical):
        for i in range(lie.dim):
            for k in range(lie.dim):
                if k not in lie.nilradical and c[i, j, k] != 0:
                    witness = Witness((i, j, k), c[i, j, k], Fraction(0))
                    break
            if witness:
                break
        if witness:
            break
    report.add(CheckResult("flagged-ideal", witness is None, witness))
    return report


def normalize_word(lie, word):
    """PBW expansion of one word as {sorted word: coefficient}."""
    cached = lie._rewrite_cache.get(word)
    if cached is not None:
        return cached
    out = None
    for p in range(len(word) - 1):
        if word[p] > word[p + 1]:
            j, i = word[p], word[p + 1]
            out = dict(normalize_word(lie, word[:p] + (i, j) + word[p + 2 :]))
            for k in range(lie.dim):
                coeff = lie.bracket[j, i, k]
                if coeff:
                    for w, c in normalize_word(lie, word[:p] + (k,) + word[p + 2 :]).items():
                        value = out.get(w, 0) + coeff * c
                        if value:
                            out[w] = value
                        else:
                            out.pop(w, None)
            break
    if out is None:
        out = {word: _ONE}
    lie._rewrite_cache[word] = out
    return out


def pbw_normalize(lie, terms):
    """Normalize a formal sum given as {word: coefficient} (or pairs).

    Returns the canonical sorted-word dictionary with zero coefficients
    dropped; normalizing twice is the identity.
    """
    if isinstance(terms, dict):
        items = terms.items()
    else:
        items = terms
    out = {}
    for word, coeff in items:
        word = tuple(word)
        if any(not (0 <= x < lie.dim) for x in word):
            raise InputError(f"word {word} uses indices outside the basis")
        for w, c in normalize_word(lie, word).items():
            value = out.get(w, 0) + coeff * c
            if value:
                out[w] = value
            else:
                out.pop(w, None)
    return out
