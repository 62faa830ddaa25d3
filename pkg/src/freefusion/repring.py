"""Representation rings at the label level: duals, tensor decompositions with
multiplicities, and polynomial dimensions.

Label universes are lazy.  A ring only exposes functions of labels, never a
materialized label set, so the circle ring and free products (both infinite)
cost nothing to build.  All rings here decompose pairs into finite multisets
and contain the trivial label with multiplicity one exactly on dual pairs.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from collections import Counter
from dataclasses import dataclass

from .complexify import ComplexifiedSet
from .fusion_sets import EMPTY_WORD, FusionSet, FusionSetError, Word
from .poly import IntPoly
from .ring import DimensionAssignment, RingElement, _basis_product_terms, dimension


class RepRing(ABC):
    """Fusion-category data at the Grothendieck level.

    Labels must be hashable, carry a canonical order via :meth:`sort_key`,
    and include a distinguished trivial label.  ``decompose_pair`` returns a
    label -> multiplicity mapping.
    """

    @property
    @abstractmethod
    def trivial(self):
        ...

    @abstractmethod
    def dual(self, label):
        ...

    @abstractmethod
    def decompose_pair(self, x, y) -> dict:
        """Multiset of irreducible labels in the tensor product of x and y."""

    def dim(self, label) -> IntPoly | None:
        """Polynomial dimension of a label, or None if the ring carries none."""
        return None

    @abstractmethod
    def label_repr(self, label) -> str:
        ...

    @abstractmethod
    def sort_key(self, label):
        ...

    def sorted_multiset(self, multiset) -> list[tuple[object, int]]:
        return sorted(multiset.items(), key=lambda kv: self.sort_key(kv[0]))


class WordRing(RepRing):
    """The representation ring of a free fusion ring: labels are words, the
    dual is word conjugation, and a pair decomposes per the ring product."""

    def __init__(self, fusion_set: FusionSet, dims: DimensionAssignment | None = None):
        self.fusion_set = fusion_set
        if dims is not None and dims.fusion_set is not fusion_set:
            raise FusionSetError("dimension assignment is for a different fusion set")
        self.dims = dims

    @property
    def trivial(self) -> Word:
        return EMPTY_WORD

    def dual(self, label):
        return self.fusion_set.word_conj(tuple(label))

    def decompose_pair(self, x, y):
        return dict(_basis_product_terms(
            self.fusion_set, self.fusion_set.check_word(x), self.fusion_set.check_word(y)))

    def dim(self, label):
        if self.dims is None:
            return None
        return dimension(RingElement.basis(self.fusion_set, label), self.dims)

    def label_repr(self, label):
        return ".".join(label) if label else "1"

    def sort_key(self, label):
        return self.fusion_set.word_sort_key(tuple(label))


class CircleRing(RepRing):
    """Characters of the circle: labels are integer winding numbers."""

    @property
    def trivial(self) -> int:
        return 0

    def dual(self, label):
        return -label

    def decompose_pair(self, x, y):
        return {x + y: 1}

    def dim(self, label):
        return IntPoly.const(1)

    def label_repr(self, label):
        return f"z^{label}" if label else "1"

    def sort_key(self, label):
        return (abs(label), 0 if label >= 0 else 1)


class Cyclic2Ring(RepRing):
    """Characters of the order-two group: labels 0 and 1, addition mod 2."""

    @property
    def trivial(self) -> int:
        return 0

    def dual(self, label):
        return label % 2

    def decompose_pair(self, x, y):
        return {(x + y) % 2: 1}

    def dim(self, label):
        return IntPoly.const(1)

    def label_repr(self, label):
        return "g" if label % 2 else "1"

    def sort_key(self, label):
        return (label % 2,)


class FreeProductRing(RepRing):
    """Free product of two rings.

    Labels are alternating words of non-trivial factor labels, written as
    tuples of ``(factor index, factor label)`` pairs; the empty word is
    trivial.  A tensor product of two such words concatenates when the
    boundary letters come from different factors.  Otherwise the boundary
    pair is decomposed inside its factor, every non-trivial summand is
    spliced back between the remainders, and the trivial multiplicity
    recurses on the shortened words.  The recursion shortens both words, so
    it terminates structurally; results are memoized per ring.
    """

    def __init__(self, left: RepRing, right: RepRing):
        self.factors = (left, right)
        self._cache: dict = {}

    @property
    def trivial(self) -> tuple:
        return ()

    def label(self, letters) -> tuple:
        """Canonical label from (factor index, factor label) pairs.

        Trivial letters are dropped.  Adjacent letters of the same factor are
        merged when their factor product is a single class (circle powers,
        cyclic group elements) and rejected otherwise, since the sequence
        then denotes no single irreducible class.
        """
        out: list[tuple[int, object]] = []
        for idx, lab in letters:
            if idx not in (0, 1):
                raise ValueError(f"factor index must be 0 or 1, got {idx!r}")
            ring = self.factors[idx]
            cur = None if lab == ring.trivial else (idx, lab)
            while cur is not None and out and out[-1][0] == cur[0]:
                ring = self.factors[cur[0]]
                merged = ring.decompose_pair(out.pop()[1], cur[1])
                if len(merged) != 1 or set(merged.values()) != {1}:
                    raise ValueError(
                        "adjacent same-factor letters do not reduce to a single class")
                (lab2,) = merged
                cur = None if lab2 == ring.trivial else (cur[0], lab2)
            if cur is not None:
                out.append(cur)
        return tuple(out)

    def dual(self, label):
        return tuple((idx, self.factors[idx].dual(lab)) for idx, lab in reversed(label))

    def decompose_pair(self, x, y):
        x, y = tuple(x), tuple(y)
        key = (x, y)
        hit = self._cache.get(key)
        if hit is None:
            hit = self._decompose(x, y)
            self._cache[key] = hit
        return dict(hit)

    def _decompose(self, x, y):
        if not x:
            return {y: 1}
        if not y:
            return {x: 1}
        (fi, a), (gi, b) = x[-1], y[0]
        if fi != gi:
            return {x + y: 1}
        ring = self.factors[fi]
        out: Counter = Counter()
        for lab, mult in ring.decompose_pair(a, b).items():
            if lab == ring.trivial:
                for deeper, m2 in self.decompose_pair(x[:-1], y[1:]).items():
                    out[deeper] += mult * m2
            else:
                out[x[:-1] + ((fi, lab),) + y[1:]] += mult
        return dict(out)

    def dim(self, label):
        total = IntPoly.const(1)
        for idx, lab in label:
            d = self.factors[idx].dim(lab)
            if d is None:
                return None
            total = total * d
        return total

    def label_repr(self, label):
        if not label:
            return "[1]"
        return "[" + " | ".join(self.factors[i].label_repr(lab) for i, lab in label) + "]"

    def sort_key(self, label):
        return (len(label), tuple((i, self.factors[i].sort_key(lab)) for i, lab in label))


class DirectProductRing(RepRing):
    """Direct product of two rings: labels are pairs, everything componentwise."""

    def __init__(self, left: RepRing, right: RepRing):
        self.factors = (left, right)

    @property
    def trivial(self) -> tuple:
        return (self.factors[0].trivial, self.factors[1].trivial)

    def dual(self, label):
        a, b = label
        return (self.factors[0].dual(a), self.factors[1].dual(b))

    def decompose_pair(self, x, y):
        out: Counter = Counter()
        left = self.factors[0].decompose_pair(x[0], y[0])
        right = self.factors[1].decompose_pair(x[1], y[1])
        for la, ma in left.items():
            for lb, mb in right.items():
                out[(la, lb)] += ma * mb
        return dict(out)

    def dim(self, label):
        da = self.factors[0].dim(label[0])
        db = self.factors[1].dim(label[1])
        if da is None or db is None:
            return None
        return da * db

    def label_repr(self, label):
        return f"({self.factors[0].label_repr(label[0])}, {self.factors[1].label_repr(label[1])})"

    def sort_key(self, label):
        return (self.factors[0].sort_key(label[0]), self.factors[1].sort_key(label[1]))


@dataclass
class CrosscheckReport:
    """Tensor decomposition of a pair of complexified words, computed along
    two independent routes."""

    x: Word
    y: Word
    via_words: dict
    via_free_product: dict

    @property
    def ok(self) -> bool:
        return self.via_words == self.via_free_product

    def render(self, ring: "FreeProductRing") -> str:
        lhs = ", ".join(f"{ring.label_repr(l)}:{m}" for l, m in ring.sorted_multiset(self.via_words))
        rhs = ", ".join(f"{ring.label_repr(l)}:{m}"
                        for l, m in ring.sorted_multiset(self.via_free_product))
        verdict = "agree" if self.ok else "DISAGREE"
        return f"{verdict}: {{{lhs}}} vs {{{rhs}}}"


class ComplexifiedEmbedding:
    """Identification of words over a complexified set with alternating labels
    in (word ring of the source) * (circle ring).

    A word splits uniquely into maximal connected pieces; each piece reads as
    a circle power, the word of base letters, and another circle power, and
    non-cancelling powers at piece boundaries merge into one circle letter.
    """

    def __init__(self, complexified: ComplexifiedSet, dims: DimensionAssignment | None = None):
        self.complexified = complexified
        self.word_ring = WordRing(complexified.source, dims)
        self.circle = CircleRing()
        self.product_ring = FreeProductRing(self.word_ring, self.circle)

    def embed_word(self, word) -> tuple:
        cs = self.complexified
        word = cs.fusion_set.check_word(word)
        parts: list[tuple[int, object]] = []
        i = 0
        while i < len(word):
            j = i
            while j + 1 < len(word) and cs.connects(word[j], word[j + 1]):
                j += 1
            pre = cs.prefix_exponent(word[i])
            suf = cs.suffix_exponent(word[j])
            if pre:
                parts.append((1, pre))
            parts.append((0, cs.base_word(word[i:j + 1])))
            if suf:
                parts.append((1, suf))
            i = j + 1
        return self.product_ring.label(parts)

    def crosscheck_product(self, x, y) -> CrosscheckReport:
        """Decompose the product of the classes of two words both via the
        complexified fusion set and via the free-product recursion."""
        cs = self.complexified
        x = cs.fusion_set.check_word(x)
        y = cs.fusion_set.check_word(y)
        product = RingElement.basis(cs.fusion_set, x) * RingElement.basis(cs.fusion_set, y)
        via_words: Counter = Counter()
        for w, c in product.terms.items():
            via_words[self.embed_word(w)] += c
        via_fp = self.product_ring.decompose_pair(self.embed_word(x), self.embed_word(y))
        return CrosscheckReport(x, y, dict(via_words), dict(via_fp))


def crosscheck_complexified_product(complexified: ComplexifiedSet, x, y) -> CrosscheckReport:
    """One-shot variant of :meth:`ComplexifiedEmbedding.crosscheck_product`."""
    return ComplexifiedEmbedding(complexified).crosscheck_product(x, y)
