import itertools

import pytest

from freefusion import (DimensionAssignment, FusionSet, FusionSetError,
                        GeneratorCombination, IntPoly, RingElement, dimension,
                        monomial_expand, ring_product, word_to_generators)
from freefusion.models import (free_orthogonal_set, hyperoctahedral_set,
                               quantum_permutation_set)

N = IntPoly.var()


def basis(fs, *letters):
    return RingElement.basis(fs, letters)


class TestProduct:
    def test_hyperoctahedral_square(self):
        fs = hyperoctahedral_set()
        assert basis(fs, "u") * basis(fs, "u") == RingElement(
            fs, {("u", "u"): 1, ("p",): 1, (): 1})

    def test_free_letter(self):
        fs = free_orthogonal_set()
        assert basis(fs, "s", "s") * basis(fs, "s") == RingElement(
            fs, {("s", "s", "s"): 1, ("s",): 1})

    def test_unit(self):
        fs = hyperoctahedral_set()
        for w in fs.iter_words(2):
            assert RingElement.unit(fs) * RingElement.basis(fs, w) == RingElement.basis(fs, w)
            assert RingElement.basis(fs, w) * RingElement.unit(fs) == RingElement.basis(fs, w)

    def test_ring_product_function(self):
        fs = free_orthogonal_set()
        assert ring_product(basis(fs, "s"), basis(fs, "s")) == RingElement(
            fs, {("s", "s"): 1, (): 1})

    def test_bilinearity(self):
        fs = hyperoctahedral_set()
        a = basis(fs, "u") + 2 * basis(fs, "p")
        b = basis(fs, "u") - RingElement.unit(fs)
        expanded = (basis(fs, "u") * basis(fs, "u") - basis(fs, "u")
                    + 2 * (basis(fs, "p") * basis(fs, "u")) - 2 * basis(fs, "p"))
        assert a * b == expanded

    def test_coefficients_nonnegative_and_concatenation_unique(self):
        for fs in (hyperoctahedral_set(), free_orthogonal_set(), quantum_permutation_set()):
            for v in fs.iter_words(3):
                for w in fs.iter_words(3):
                    product = RingElement.basis(fs, v) * RingElement.basis(fs, w)
                    assert all(c > 0 for c in product.terms.values())
                    assert product.coefficient(v + w) == 1

    def test_associativity_on_basis_words(self):
        for fs in (hyperoctahedral_set(), free_orthogonal_set()):
            words = list(fs.iter_words(3))
            for x, y, z in itertools.product(words, repeat=3):
                ax, ay, az = (RingElement.basis(fs, w) for w in (x, y, z))
                assert (ax * ay) * az == ax * (ay * az)

    def test_star_antimultiplicative(self):
        fs = hyperoctahedral_set()
        words = list(fs.iter_words(3))
        for v in words:
            for w in words:
                av, aw = RingElement.basis(fs, v), RingElement.basis(fs, w)
                assert (av * aw).star() == aw.star() * av.star()

    def test_mixed_sets_rejected(self):
        a = RingElement.basis(hyperoctahedral_set(), ("u",))
        b = RingElement.basis(hyperoctahedral_set(), ("u",))
        with pytest.raises(FusionSetError, match="different fusion sets"):
            a * b


class TestRendering:
    def test_examples(self):
        fs = hyperoctahedral_set()
        assert str(basis(fs, "u") * basis(fs, "u")) == "1 + a[p] + a[u.u]"
        assert str(RingElement.zero(fs)) == "0"
        assert str(RingElement.unit(fs)) == "1"
        assert str(-2 * basis(fs, "u") + basis(fs, "p")) == "-2*a[u] + a[p]"

    def test_terms_sorted_length_then_letter_order(self):
        fs = hyperoctahedral_set()
        element = RingElement(fs, {("p",): 1, ("u",): 1, (): 1, ("u", "u"): 1})
        assert str(element) == "1 + a[u] + a[p] + a[u.u]"


class TestMonomialExpand:
    def test_examples(self):
        fs = hyperoctahedral_set()
        assert monomial_expand(fs, ("u", "u")) == basis(fs, "u") * basis(fs, "u")
        fso = free_orthogonal_set()
        assert monomial_expand(fso, ("s",)) == basis(fso, "s")
        assert monomial_expand(fso, ("s", "s", "s")) == RingElement(
            fso, {("s", "s", "s"): 1, ("s",): 2})

    def test_empty_sequence_is_unit(self):
        fs = hyperoctahedral_set()
        assert monomial_expand(fs, ()) == RingElement.unit(fs)


class TestWordToGenerators:
    def test_examples(self):
        fso = free_orthogonal_set()
        assert word_to_generators(fso, ("s", "s")) == GeneratorCombination(
            fso, {("s", "s"): 1, (): -1})
        fsh = hyperoctahedral_set()
        assert word_to_generators(fsh, ("u", "u")) == GeneratorCombination(
            fsh, {("u", "u"): 1, ("p",): -1, (): -1})
        assert word_to_generators(fso, ("s",)) == GeneratorCombination(fso, {("s",): 1})

    def test_round_trip(self):
        for fs in (free_orthogonal_set(), quantum_permutation_set(), hyperoctahedral_set()):
            for w in fs.iter_words(4):
                assert word_to_generators(fs, w).expand() == RingElement.basis(fs, w)

    def test_unitriangular(self):
        fs = hyperoctahedral_set()
        for w in fs.iter_words(4):
            comb = word_to_generators(fs, w)
            assert comb.terms.get(w) == 1
            assert all(len(seq) < len(w) for seq in comb.terms if seq != w)
            expansion = monomial_expand(fs, w)
            assert expansion.coefficient(w) == 1
            assert all(len(v) < len(w) for v in expansion.terms if v != w)

    def test_rendering(self):
        fs = hyperoctahedral_set()
        assert str(word_to_generators(fs, ("u", "u"))) == "-1 - a[p] + a[u]*a[u]"
        assert str(word_to_generators(fs, ())) == "1"


class TestDimension:
    def hyper_dims(self):
        fs = hyperoctahedral_set()
        return fs, DimensionAssignment(fs, {"u": N, "p": N - 1})

    def test_examples(self):
        fs, d = self.hyper_dims()
        assert dimension(basis(fs, "p"), d) == N - 1
        assert dimension(basis(fs, "u", "u"), d) == N ** 2 - N
        assert dimension(RingElement.unit(fs), d) == 1

    def test_additive(self):
        fs, d = self.hyper_dims()
        a = basis(fs, "u") + 3 * basis(fs, "p")
        assert dimension(a, d) == N + 3 * (N - 1)

    def test_multiplicative(self):
        fs, d = self.hyper_dims()
        for v in fs.iter_words(2):
            for w in fs.iter_words(3):
                av, aw = RingElement.basis(fs, v), RingElement.basis(fs, w)
                assert dimension(av * aw, d) == dimension(av, d) * dimension(aw, d)

    def test_integer_dimensions_lifted(self):
        fs = free_orthogonal_set()
        d = DimensionAssignment(fs, {"s": 3})
        assert dimension(basis(fs, "s", "s"), d) == 8

    def test_conjugation_invariance_required(self):
        fs = FusionSet(("a", "b"), {}, {"a": "b", "b": "a"})
        with pytest.raises(FusionSetError, match="conjugate"):
            DimensionAssignment(fs, {"a": N, "b": N - 1})
        DimensionAssignment(fs, {"a": N, "b": N})

    def test_missing_letter_rejected(self):
        fs = hyperoctahedral_set()
        with pytest.raises(FusionSetError, match="missing"):
            DimensionAssignment(fs, {"u": N})
