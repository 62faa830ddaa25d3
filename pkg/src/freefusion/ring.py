"""Arithmetic in a free fusion ring.

Elements are finite integer combinations of basis words a_w over a fusion
set.  The product of two basis words sums, over every split of the left word
into x,y with the conjugate of y a prefix of the right word, a concatenation
term and (when both remainders are non-empty and their boundary fusion is
defined) a fused term.  Everything else is bilinear extension.

Coefficients are plain Python integers, so they never overflow; they grow
combinatorially with word length and this module is meant for verification,
not for racing.
"""

from __future__ import annotations

from collections import Counter

from .fusion_sets import EMPTY_WORD, FusionSet, FusionSetError, Word
from .poly import IntPoly


def _basis_product_terms(fs: FusionSet, v: Word, w: Word):
    """Word -> coefficient pairs of the product of two basis words."""
    key = (v, w)
    hit = fs._product_cache.get(key)
    if hit is None:
        terms: Counter = Counter()
        for cut in range(min(len(v), len(w)) + 1):
            tail = v[len(v) - cut:] if cut else EMPTY_WORD
            if fs.word_conj(tail) != w[:cut]:
                continue
            head, rest = v[:len(v) - cut], w[cut:]
            terms[head + rest] += 1
            if head and rest:
                fused = fs.word_fuse(head, rest)
                if fused is not None:
                    terms[fused] += 1
        hit = tuple(terms.items())
        fs._product_cache[key] = hit
    return hit


def _render_terms(pairs, basis_text) -> str:
    # pairs of (key, coefficient); basis_text(key) is None for the unit term
    if not pairs:
        return "0"
    chunks = []
    for key, coeff in pairs:
        body = basis_text(key)
        if body is None:
            text = str(abs(coeff))
        elif abs(coeff) == 1:
            text = body
        else:
            text = f"{abs(coeff)}*{body}"
        if not chunks:
            chunks.append(text if coeff > 0 else f"-{text}")
        else:
            chunks.append((" + " if coeff > 0 else " - ") + text)
    return "".join(chunks)


class RingElement:
    """Finite integer combination of basis words; no zero terms are stored."""

    __slots__ = ("fusion_set", "terms")

    def __init__(self, fusion_set: FusionSet, terms=None):
        self.fusion_set = fusion_set
        clean: dict[Word, int] = {}
        if terms:
            for word, coeff in dict(terms).items():
                word = fusion_set.check_word(word)
                coeff = int(coeff)
                if coeff:
                    clean[word] = coeff
        self.terms = clean

    @classmethod
    def zero(cls, fs: FusionSet) -> "RingElement":
        return cls(fs)

    @classmethod
    def unit(cls, fs: FusionSet) -> "RingElement":
        return cls(fs, {EMPTY_WORD: 1})

    @classmethod
    def basis(cls, fs: FusionSet, word) -> "RingElement":
        return cls(fs, {tuple(word): 1})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, word) -> int:
        return self.terms.get(tuple(word), 0)

    def _require_same_set(self, other: "RingElement"):
        if self.fusion_set is not other.fusion_set:
            raise FusionSetError("elements live over different fusion sets")

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == ({} if other == 0 else {EMPTY_WORD: other})
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.fusion_set is other.fusion_set and self.terms == other.terms

    __hash__ = None

    def __add__(self, other):
        if not isinstance(other, RingElement):
            return NotImplemented
        self._require_same_set(other)
        out = Counter(self.terms)
        for w, c in other.terms.items():
            out[w] += c
        return RingElement(self.fusion_set, out)

    def __neg__(self):
        return RingElement(self.fusion_set, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, RingElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return RingElement(self.fusion_set, {w: c * other for w, c in self.terms.items()})
        if not isinstance(other, RingElement):
            return NotImplemented
        self._require_same_set(other)
        out: Counter = Counter()
        for v, cv in self.terms.items():
            for w, cw in other.terms.items():
                scale = cv * cw
                for word, k in _basis_product_terms(self.fusion_set, v, w):
                    out[word] += scale * k
        return RingElement(self.fusion_set, out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def star(self) -> "RingElement":
        """The *-structure: conjugate every basis word."""
        return RingElement(
            self.fusion_set,
            {self.fusion_set.word_conj(w): c for w, c in self.terms.items()})

    def sorted_terms(self) -> list[tuple[Word, int]]:
        return sorted(self.terms.items(), key=lambda kv: self.fusion_set.word_sort_key(kv[0]))

    def __str__(self):
        return _render_terms(
            self.sorted_terms(),
            lambda w: f"a[{'.'.join(w)}]" if w else None)

    def __repr__(self):
        return f"<RingElement {self}>"


def ring_product(a: RingElement, b: RingElement) -> RingElement:
    return a * b


def monomial_expand(fs: FusionSet, letters) -> RingElement:
    """The product a_{s1}...a_{sk} of single-letter elements, in the word basis.

    The plain concatenation always appears with coefficient one and every
    other term is strictly shorter.
    """
    out = RingElement.unit(fs)
    for s in letters:
        out = out * RingElement.basis(fs, (s,))
    return out


class GeneratorCombination:
    """Integer combination of formal products of single-letter generators.

    Keys are generator sequences; the empty sequence is the unit.  Expanding
    multiplies every sequence out into the word basis.
    """

    __slots__ = ("fusion_set", "terms")

    def __init__(self, fusion_set: FusionSet, terms=None):
        self.fusion_set = fusion_set
        clean: dict[Word, int] = {}
        if terms:
            for seq, coeff in dict(terms).items():
                seq = fusion_set.check_word(seq)
                coeff = int(coeff)
                if coeff:
                    clean[seq] = coeff
        self.terms = clean

    def expand(self) -> RingElement:
        out = RingElement.zero(self.fusion_set)
        for seq, c in self.terms.items():
            out = out + c * monomial_expand(self.fusion_set, seq)
        return out

    def __eq__(self, other):
        if not isinstance(other, GeneratorCombination):
            return NotImplemented
        return self.fusion_set is other.fusion_set and self.terms == other.terms

    __hash__ = None

    def sorted_terms(self) -> list[tuple[Word, int]]:
        return sorted(self.terms.items(), key=lambda kv: self.fusion_set.word_sort_key(kv[0]))

    def __str__(self):
        return _render_terms(
            self.sorted_terms(),
            lambda seq: "*".join(f"a[{s}]" for s in seq) if seq else None)

    def __repr__(self):
        return f"<GeneratorCombination {self}>"


def _word_to_generator_terms(fs: FusionSet, word: Word):
    """Memoized core of the inverse basis change; returns (sequence, coeff) pairs."""
    hit = fs._generator_cache.get(word)
    if hit is not None:
        return hit
    if len(word) <= 1:
        result = ((word, 1),)
    else:
        expansion = monomial_expand(fs, word)
        acc: Counter = Counter({word: 1})
        for shorter, c in expansion.terms.items():
            if shorter == word:
                continue
            for seq, c2 in _word_to_generator_terms(fs, shorter):
                acc[seq] -= c * c2
        result = tuple((seq, c) for seq, c in acc.items() if c)
    fs._generator_cache[word] = result
    return result


def word_to_generators(fs: FusionSet, word) -> GeneratorCombination:
    """Express a basis word as an integer combination of generator products.

    This inverts :func:`monomial_expand`: expanding the result gives back the
    basis word exactly, and every non-leading sequence is strictly shorter
    than the word.
    """
    word = fs.check_word(word)
    return GeneratorCombination(fs, dict(_word_to_generator_terms(fs, word)))


class DimensionAssignment:
    """Polynomial dimension for every generator letter.

    Dimensions must agree on conjugate letters; values may be given as plain
    integers and are lifted to constants.
    """

    __slots__ = ("fusion_set", "dims")

    def __init__(self, fusion_set: FusionSet, dims):
        self.fusion_set = fusion_set
        self.dims: dict[str, IntPoly] = {}
        for tok, val in dict(dims).items():
            if tok not in fusion_set:
                raise FusionSetError(f"dimension given for unknown letter {tok!r}")
            self.dims[tok] = val if isinstance(val, IntPoly) else IntPoly.const(val)
        missing = [tok for tok in fusion_set.letters if tok not in self.dims]
        if missing:
            raise FusionSetError("dimension missing for letters: " + ", ".join(missing))
        for s in fusion_set.letters:
            if self.dims[s] != self.dims[fusion_set.conjugate(s)]:
                raise FusionSetError(f"dimension of {s!r} differs from its conjugate")

    def __getitem__(self, tok: str) -> IntPoly:
        return self.dims[tok]


def dimension(a: RingElement, d: DimensionAssignment) -> IntPoly:
    """The ring homomorphism into Z[n] sending each generator to its dimension.

    Computed through the generator basis change, so it is automatically
    multiplicative; it is additive over the terms of the element.
    """
    if d.fusion_set is not a.fusion_set:
        raise FusionSetError("dimension assignment is for a different fusion set")
    total = IntPoly()
    for word, coeff in a.terms.items():
        for seq, c2 in _word_to_generator_terms(a.fusion_set, word):
            prod = IntPoly.const(coeff * c2)
            for s in seq:
                prod = prod * d[s]
            total = total + prod
    return total
