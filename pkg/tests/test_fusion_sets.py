import itertools

import pytest

from freefusion import (EVEN, ODD, FusionSet, FusionSetError, fusion_set_to_text,
                        parse_fusion_set, validate_fusion_set)
from freefusion.models import (free_orthogonal_set, hyperoctahedral_set,
                               quantum_permutation_set)

HYPEROCTAHEDRAL_SOURCE = """\
# two self-conjugate letters
letters: u p
conj: u=u p=p
fusion: u.u=p u.p=u p.u=u p.p=p
parity: u=odd p=even
"""

FREE_ORTHOGONAL_SOURCE = """\
letters: s
conj: s=s
"""

UVPQ_SOURCE = """\
letters: u v p q
conj: u=v v=u p=p q=q
fusion: u.v=q u.p=u v.u=p v.q=v p.v=v p.p=p q.u=u q.q=q
"""


def incompatible_set():
    # a.a = b but a.b is empty: the compatibility axiom fails at (a, a, b)
    return FusionSet(("a", "b"), {("a", "a"): "b"}, {"a": "a", "b": "b"})


class TestParsing:
    def test_hyperoctahedral_source(self):
        fs = parse_fusion_set(HYPEROCTAHEDRAL_SOURCE)
        assert fs.letters == ("u", "p")
        assert fs.fuse("u", "u") == "p"
        assert fs.fuse("u", "p") == "u"
        assert fs.fuse("p", "u") == "u"
        assert fs.fuse("p", "p") == "p"
        assert fs.conjugate("u") == "u"
        assert fs.parity_of("u") == ODD
        assert fs.parity_of("p") == EVEN

    def test_single_letter_empty_fusion(self):
        fs = parse_fusion_set(FREE_ORTHOGONAL_SOURCE)
        assert fs.letters == ("s",)
        assert fs.fuse("s", "s") is None
        assert not fs.has_parity

    def test_unknown_letter_in_fusion_names_it(self):
        with pytest.raises(FusionSetError, match="'x'") as err:
            parse_fusion_set("letters: u\nconj: u=u\nfusion: u.u=x\n")
        assert err.value.line == 3

    def test_syntax_error_carries_line_number(self):
        with pytest.raises(FusionSetError, match="line 2"):
            parse_fusion_set("letters: u\nnot a directive\n")

    def test_duplicate_letter(self):
        with pytest.raises(FusionSetError, match="duplicate letter"):
            parse_fusion_set("letters: u u\nconj: u=u\n")

    def test_conjugation_must_cover_every_letter(self):
        with pytest.raises(FusionSetError, match="conjugation missing"):
            parse_fusion_set("letters: u p\nconj: u=u\n")

    def test_parity_is_all_or_none(self):
        with pytest.raises(FusionSetError, match="parity missing"):
            parse_fusion_set("letters: u p\nconj: u=u p=p\nparity: u=odd\n")

    def test_duplicate_assignments_rejected(self):
        with pytest.raises(FusionSetError, match="given twice"):
            parse_fusion_set("letters: u\nconj: u=u u=u\n")
        with pytest.raises(FusionSetError, match="given twice"):
            parse_fusion_set("letters: u\nconj: u=u\nfusion: u.u=u u.u=u\n")

    def test_bad_entries(self):
        with pytest.raises(FusionSetError, match="bad conjugation entry"):
            parse_fusion_set("letters: u\nconj: u\n")
        with pytest.raises(FusionSetError, match="bad fusion entry"):
            parse_fusion_set("letters: u\nconj: u=u\nfusion: uu=u\n")
        with pytest.raises(FusionSetError, match="bad parity entry"):
            parse_fusion_set("letters: u\nconj: u=u\nparity: u=strange\n")
        with pytest.raises(FusionSetError, match="unknown directive"):
            parse_fusion_set("things: u\n")

    def test_comments_and_blank_lines_ignored(self):
        fs = parse_fusion_set("\n# intro\nletters: s  # trailing\n\nconj: s=s\n")
        assert fs.letters == ("s",)

    def test_serialize_round_trip(self):
        for fs in (hyperoctahedral_set(), free_orthogonal_set(),
                   quantum_permutation_set(), parse_fusion_set(UVPQ_SOURCE)):
            back = parse_fusion_set(fusion_set_to_text(fs))
            assert back.letters == fs.letters
            assert back.fusion == fs.fusion
            assert back.conj == fs.conj
            assert back.parity == fs.parity


class TestConstruction:
    def test_illegal_token(self):
        with pytest.raises(FusionSetError, match="illegal letter token"):
            FusionSet(("a.b",), {}, {"a.b": "a.b"})

    def test_unknown_letters_rejected(self):
        with pytest.raises(FusionSetError, match="unknown letter"):
            FusionSet(("a",), {("a", "b"): "a"}, {"a": "a"})
        with pytest.raises(FusionSetError, match="unknown letter"):
            FusionSet(("a",), {}, {"a": "b"})

    def test_word_letters_checked(self):
        fs = free_orthogonal_set()
        with pytest.raises(FusionSetError, match="unknown letter"):
            fs.check_word(("s", "t"))


class TestValidation:
    def test_hyperoctahedral_valid(self):
        assert validate_fusion_set(hyperoctahedral_set()).ok

    def test_empty_fusion_valid(self):
        assert validate_fusion_set(free_orthogonal_set()).ok

    def test_compatibility_violation_with_witness(self):
        report = validate_fusion_set(incompatible_set())
        assert not report.ok
        axioms = {v.axiom for v in report.violations}
        assert "fusion-conjugation-compatible" in axioms
        witnesses = {v.witness for v in report.violations
                     if v.axiom == "fusion-conjugation-compatible"}
        assert ("a", "a", "b") in witnesses

    def test_all_violations_reported(self):
        # break the involution on both letters at once
        fs = FusionSet(("a", "b", "c"), {}, {"a": "b", "b": "c", "c": "a"})
        report = validate_fusion_set(fs)
        involution = [v for v in report.violations if v.axiom == "conjugation-involutive"]
        assert len(involution) == 3

    def test_report_rendering(self):
        assert str(validate_fusion_set(free_orthogonal_set())) == "valid"
        assert "conj" in str(validate_fusion_set(
            FusionSet(("a", "b"), {}, {"a": "b", "b": "b"})))

    def test_matches_bruteforce_on_random_sets(self):
        # independent quantifier sweep, written directly from the axioms
        import random
        rng = random.Random(7)

        def brute_force_valid(fs):
            if any(fs.conjugate(fs.conjugate(s)) != s for s in fs.letters):
                return False
            for s1, s2, s3 in itertools.product(fs.letters, repeat=3):
                ab = fs.fuse(s1, s2)
                left = None if ab is None else fs.fuse(ab, s3)
                bc = fs.fuse(s2, s3)
                right = None if bc is None else fs.fuse(s1, bc)
                if left != right:
                    return False
                if (fs.fuse(s1, s2) == fs.conjugate(s3)) != (fs.fuse(s2, s3) == fs.conjugate(s1)):
                    return False
            return True

        for _ in range(300):
            letters = tuple("abcd"[:rng.randint(1, 4)])
            perm = list(letters)
            rng.shuffle(perm)
            conj = {}
            while perm:
                x = perm.pop()
                if perm and rng.random() < 0.5:
                    y = perm.pop()
                    conj[x], conj[y] = y, x
                else:
                    conj[x] = x
            fusion = {}
            for a in letters:
                for b in letters:
                    if rng.random() < 0.3:
                        fusion[(a, b)] = rng.choice(letters)
            fs = FusionSet(letters, fusion, conj)
            assert validate_fusion_set(fs).ok == brute_force_valid(fs)


class TestWordOperations:
    def test_fuse_examples(self):
        fs = hyperoctahedral_set()
        assert fs.word_fuse(("u", "p"), ("u",)) == ("u", "u")
        assert fs.word_fuse(("u",), ("u",)) == ("p",)
        assert free_orthogonal_set().word_fuse(("s",), ("s",)) is None

    def test_fuse_requires_non_empty(self):
        fs = hyperoctahedral_set()
        with pytest.raises(FusionSetError, match="non-empty"):
            fs.word_fuse((), ("u",))
        with pytest.raises(FusionSetError, match="non-empty"):
            fs.word_fuse(("u",), ())

    def test_conj_examples(self):
        fs = hyperoctahedral_set()
        assert fs.word_conj(("u", "p")) == ("p", "u")
        assert fs.word_conj(()) == ()
        uvpq = parse_fusion_set(UVPQ_SOURCE)
        assert uvpq.word_conj(("u", "q")) == ("q", "v")

    def test_conj_involutive_and_antimultiplicative(self):
        for fs in (hyperoctahedral_set(), parse_fusion_set(UVPQ_SOURCE)):
            words = [w for w in fs.iter_words(3)]
            for w in words:
                assert fs.word_conj(fs.word_conj(w)) == w
            for v in words:
                for w in words:
                    if not v or not w:
                        continue
                    fused = fs.word_fuse(v, w)
                    other = fs.word_fuse(fs.word_conj(w), fs.word_conj(v))
                    if fused is None:
                        assert other is None
                    else:
                        assert other == fs.word_conj(fused)

    def test_word_fusion_associative_on_valid_set(self):
        fs = hyperoctahedral_set()
        words = [w for w in fs.iter_words(3, min_len=1)]
        for u, v, w in itertools.product(words, repeat=3):
            uv = fs.word_fuse(u, v)
            left = fs.word_fuse(uv, w) if uv is not None else None
            vw = fs.word_fuse(v, w)
            right = fs.word_fuse(u, vw) if vw is not None else None
            assert left == right

    def test_parity_extends_additively(self):
        fs = hyperoctahedral_set()
        for w in fs.iter_words(3):
            assert fs.word_parity(w) == sum(fs.parity_of(s) for s in w) % 2
            assert fs.word_parity(fs.word_conj(w)) == fs.word_parity(w)
        for v in fs.iter_words(2, min_len=1):
            for w in fs.iter_words(2, min_len=1):
                fused = fs.word_fuse(v, w)
                if fused is not None:
                    assert fs.word_parity(fused) == (fs.word_parity(v) + fs.word_parity(w)) % 2

    def test_iter_words_order(self):
        fs = hyperoctahedral_set()
        words = list(fs.iter_words(2))
        assert words == [(), ("u",), ("p",), ("u", "u"), ("u", "p"), ("p", "u"), ("p", "p")]
        assert words == sorted(words, key=fs.word_sort_key)
