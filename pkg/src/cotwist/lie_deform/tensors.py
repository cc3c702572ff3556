"""Exact elements of tensor powers of an enveloping algebra.

A TensorPoly is a formal sum of slot tuples of PBW-sorted words with
rational coefficients: {(word_0, ..., word_{slots-1}): coefficient}.  All
arithmetic renormalizes through the presentation's rewriter, so equal
elements always have equal term dictionaries.
"""

import itertools
from fractions import Fraction

from ..errors import InputError
from .presentation import normalize_word

__all__ = ["TensorPoly"]

_ONE = Fraction(1)


class TensorPoly:
    __slots__ = ("lie", "slots", "terms")

    def __init__(self, lie, slots, terms=None):
        self.lie = lie
        self.slots = slots
        self.terms = {} if terms is None else terms

    @classmethod
    def zero(cls, lie, slots):
        return cls(lie, slots)

    @classmethod
    def one(cls, lie, slots):
        return cls(lie, slots, {((),) * slots: _ONE})

    @classmethod
    def from_terms(cls, lie, slots, items):
        """Build from (key, coefficient) pairs, normalizing every slot."""
        out = {}
        for key, coeff in items:
            if len(key) != slots:
                raise InputError(f"key {key} does not have {slots} slots")
            expansions = [normalize_word(lie, tuple(word)) for word in key]
            for combo in itertools.product(*(e.items() for e in expansions)):
                value = coeff
                for _, c in combo:
                    value = value * c
                if not value:
                    continue
                new_key = tuple(w for w, _ in combo)
                total = out.get(new_key, 0) + value
                if total:
                    out[new_key] = total
                else:
                    out.pop(new_key, None)
        return cls(lie, slots, out)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, TensorPoly)
            and self.slots == other.slots
            and self.lie is other.lie
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((id(self.lie), self.slots, frozenset(self.terms.items())))

    def __add__(self, other):
        self._check_compatible(other)
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            value = out.get(key, 0) + coeff
            if value:
                out[key] = value
            else:
                out.pop(key, None)
        return TensorPoly(self.lie, self.slots, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return TensorPoly(self.lie, self.slots, {k: -c for k, c in self.terms.items()})

    def scale(self, scalar):
        if not scalar:
            return TensorPoly(self.lie, self.slots)
        return TensorPoly(self.lie, self.slots, {k: scalar * c for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, TensorPoly):
            self._check_compatible(other)
            items = []
            for k1, c1 in self.terms.items():
                for k2, c2 in other.terms.items():
                    items.append((tuple(a + b for a, b in zip(k1, k2)), c1 * c2))
            return TensorPoly.from_terms(self.lie, self.slots, items)
        return self.scale(Fraction(other))

    def __rmul__(self, scalar):
        return self.scale(Fraction(scalar))

    def _check_compatible(self, other):
        if self.lie is not other.lie or self.slots != other.slots:
            raise InputError("operands live in different tensor algebras")

    def coproduct(self, slot):
        """Apply the (primitive-on-generators) coproduct to one slot,
        splitting it into slots `slot` and `slot + 1`.

        Delta is multiplicative, so a word maps to the sum over all ways of
        distributing its letters between the two legs, relative order kept;
        subwords of sorted words stay sorted."""
        out = {}
        for key, coeff in self.terms.items():
            word = key[slot]
            for mask in range(1 << len(word)):
                left = tuple(word[p] for p in range(len(word)) if mask >> p & 1)
                right = tuple(word[p] for p in range(len(word)) if not mask >> p & 1)
                new_key = key[:slot] + (left, right) + key[slot + 1 :]
                value = out.get(new_key, 0) + coeff
                if value:
                    out[new_key] = value
                else:
                    out.pop(new_key, None)
        return TensorPoly(self.lie, self.slots + 1, out)

    def counit(self, slot):
        """Apply the counit to one slot (drop it); empty words survive."""
        out = {}
        for key, coeff in self.terms.items():
            if key[slot]:
                continue
            new_key = key[:slot] + key[slot + 1 :]
            value = out.get(new_key, 0) + coeff
            if value:
                out[new_key] = value
            else:
                out.pop(new_key, None)
        return TensorPoly(self.lie, self.slots - 1, out)

    def antipode(self, slot):
        """Apply the antipode to one slot: reverse the word and flip the
        sign by its length."""
        items = []
        for key, coeff in self.terms.items():
            word = key[slot]
            new_key = key[:slot] + (word[::-1],) + key[slot + 1 :]
            items.append((new_key, -coeff if len(word) % 2 else coeff))
        return TensorPoly.from_terms(self.lie, self.slots, items)

    def merge(self, slot):
        """Multiply slots slot and slot + 1 together into a single slot."""
        if not 0 <= slot < self.slots - 1:
            raise InputError(f"cannot merge slot {slot} of {self.slots}")
        items = []
        for key, coeff in self.terms.items():
            new_key = key[:slot] + (key[slot] + key[slot + 1],) + key[slot + 2 :]
            items.append((new_key, coeff))
        return TensorPoly.from_terms(self.lie, self.slots - 1, items)

    def permute(self, order):
        """Reorder slots so new slot t holds old slot order[t]."""
        if sorted(order) != list(range(self.slots)):
            raise InputError("order must be a permutation of the slots")
        out = {}
        for key, coeff in self.terms.items():
            out[tuple(key[t] for t in order)] = coeff
        return TensorPoly(self.lie, self.slots, out)

    def embed(self, slots, positions):
        """Include into a larger tensor power, placing slot t of self at
        positions[t] and empty words elsewhere."""
        out = {}
        empty = ((),) * slots
        for key, coeff in self.terms.items():
            new_key = list(empty)
            for word, pos in zip(key, positions):
                new_key[pos] = word
            out[tuple(new_key)] = coeff
        return TensorPoly(self.lie, slots, out)

    def max_word_length(self):
        return max((sum(len(w) for w in k) for k in self.terms), default=0)

    def __repr__(self):
        if not self.terms:
            return "TensorPoly(0)"
        bits = []
        for key, coeff in sorted(self.terms.items()):
            words = " (x) ".join(
                "".join(self.lie.names[i] for i in word) if word else "1" for word in key
            )
            bits.append(f"{coeff} * {words}")
        return "TensorPoly(" + " + ".join(bits) + ")"
