"""Fusion sets and the operations they induce on words.

A fusion set is a finite alphabet with a partial binary fusion and an
involutive conjugation; absent fusion pairs encode the empty result.  Words
over the alphabet pick up a boundary fusion and a reversing conjugation,
which is all the structure the free fusion ring needs.

Construction only checks structural well-formedness (legal tokens, total
conjugation, all-or-none parity).  The algebraic axioms are checked by
:func:`validate_fusion_set`, which reports every violation with a witness
instead of raising, so invalid sets can be built and inspected on purpose.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass

Word = tuple[str, ...]
EMPTY_WORD: Word = ()

EVEN = 0
ODD = 1

_TOKEN_RE = re.compile(r"[A-Za-z0-9_]+\Z")
_PARITY_NAMES = {"even": EVEN, "odd": ODD}
_PARITY_TOKENS = {EVEN: "even", ODD: "odd"}


class FusionSetError(ValueError):
    """Malformed fusion-set data or source text."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


@dataclass(frozen=True)
class Violation:
    """One failed axiom instance together with the witnessing letters."""

    axiom: str
    witness: tuple[str, ...]
    message: str

    def __str__(self):
        return self.message


class ValidationReport:
    """Collection of axiom violations; empty means the set is valid."""

    def __init__(self, violations=()):
        self.violations = list(violations)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self):
        if self.ok:
            return "valid"
        return "\n".join(str(v) for v in self.violations)


class FusionSet:
    """Finite letter set with partial fusion, conjugation and optional parity.

    Letters carry their declared order; all word orderings derive from it.
    Instances are immutable after construction and safe to share between
    threads (internal caches are append-only and semantically invisible).
    """

    def __init__(self, letters, fusion, conj, parity=None):
        self.letters: tuple[str, ...] = tuple(letters)
        seen: set[str] = set()
        for tok in self.letters:
            if not _TOKEN_RE.match(tok):
                raise FusionSetError(f"illegal letter token {tok!r}")
            if tok in seen:
                raise FusionSetError(f"duplicate letter {tok!r}")
            seen.add(tok)
        self._index = {tok: i for i, tok in enumerate(self.letters)}

        self.fusion: dict[tuple[str, str], str] = dict(fusion)
        for (a, b), c in self.fusion.items():
            for tok in (a, b, c):
                if tok not in self._index:
                    raise FusionSetError(
                        f"fusion rule {a}.{b}={c} uses unknown letter {tok!r}")

        self.conj: dict[str, str] = dict(conj)
        for a, b in self.conj.items():
            for tok in (a, b):
                if tok not in self._index:
                    raise FusionSetError(f"conjugation {a}={b} uses unknown letter {tok!r}")
        missing = [tok for tok in self.letters if tok not in self.conj]
        if missing:
            raise FusionSetError("conjugation missing for letters: " + ", ".join(missing))

        if parity is None:
            self.parity = None
        else:
            self.parity = {tok: int(p) for tok, p in dict(parity).items()}
            for tok, p in self.parity.items():
                if tok not in self._index:
                    raise FusionSetError(f"parity given for unknown letter {tok!r}")
                if p not in (EVEN, ODD):
                    raise FusionSetError(f"parity of {tok!r} must be {EVEN} (even) or {ODD} (odd)")
            missing = [tok for tok in self.letters if tok not in self.parity]
            if missing:
                raise FusionSetError("parity missing for letters: " + ", ".join(missing))

        # caches used by the ring layer; keyed by word pairs / words
        self._product_cache: dict = {}
        self._generator_cache: dict = {}

    def __repr__(self):
        return f"<FusionSet {{{', '.join(self.letters)}}}>"

    def __contains__(self, tok) -> bool:
        return tok in self._index

    def letter_index(self, tok: str) -> int:
        return self._index[tok]

    def fuse(self, a: str, b: str) -> str | None:
        """Fusion of two letters; None encodes the empty result."""
        return self.fusion.get((a, b))

    def conjugate(self, a: str) -> str:
        return self.conj[a]

    @property
    def has_parity(self) -> bool:
        return self.parity is not None

    def parity_of(self, a: str) -> int:
        if self.parity is None:
            raise FusionSetError("fusion set carries no parity map")
        return self.parity[a]

    # ------------------------------------------------------------------
    # induced structure on words

    def check_word(self, w) -> Word:
        w = tuple(w)
        for tok in w:
            if tok not in self._index:
                raise FusionSetError(f"word uses unknown letter {tok!r}")
        return w

    def word_conj(self, w: Word) -> Word:
        """Reverse the word and conjugate every letter; involutive."""
        return tuple(self.conj[s] for s in reversed(w))

    def word_fuse(self, v: Word, w: Word) -> Word | None:
        """Concatenate with the boundary letters fused; None if that fusion
        is empty.  Defined only for non-empty words."""
        if not v or not w:
            raise FusionSetError("word fusion requires non-empty words")
        mid = self.fuse(v[-1], w[0])
        if mid is None:
            return None
        return v[:-1] + (mid,) + w[1:]

    def word_parity(self, w: Word) -> int:
        return sum(self.parity_of(s) for s in w) % 2

    def word_sort_key(self, w: Word):
        """Length-then-lexicographic key in declared letter order."""
        return (len(w), tuple(self._index[s] for s in w))

    def iter_words(self, max_len: int, min_len: int = 0):
        """All words with ``min_len <= length <= max_len`` in sort-key order."""
        for length in range(min_len, max_len + 1):
            yield from itertools.product(self.letters, repeat=length)


def _parity_violations(fs: FusionSet) -> list[Violation]:
    out = []
    for s in fs.letters:
        if fs.parity_of(fs.conjugate(s)) != fs.parity_of(s):
            out.append(Violation(
                "parity-conjugation", (s,),
                f"parity(conj({s})) != parity({s})"))
    for a, b in itertools.product(fs.letters, repeat=2):
        c = fs.fuse(a, b)
        if c is not None and fs.parity_of(c) != (fs.parity_of(a) + fs.parity_of(b)) % 2:
            out.append(Violation(
                "parity-grading", (a, b),
                f"parity({a}.{b}) != parity({a}) + parity({b}) mod 2"))
    return out


def validate_fusion_set(fs: FusionSet) -> ValidationReport:
    """Check every axiom instance by exhaustive enumeration.

    All violations are reported, each with a concrete witness, so the report
    doubles as a debugging aid for hand-built sets.
    """
    out: list[Violation] = []
    for s in fs.letters:
        ss = fs.conjugate(fs.conjugate(s))
        if ss != s:
            out.append(Violation(
                "conjugation-involutive", (s,),
                f"conj(conj({s})) = {ss} != {s}"))
    for s1, s2, s3 in itertools.product(fs.letters, repeat=3):
        ab = fs.fuse(s1, s2)
        left = fs.fuse(ab, s3) if ab is not None else None
        bc = fs.fuse(s2, s3)
        right = fs.fuse(s1, bc) if bc is not None else None
        if left != right:
            out.append(Violation(
                "fusion-associative", (s1, s2, s3),
                f"({s1}.{s2}).{s3} = {left} != {s1}.({s2}.{s3}) = {right}"))
    for s1, s2, s3 in itertools.product(fs.letters, repeat=3):
        lhs = fs.fuse(s1, s2) == fs.conjugate(s3)
        rhs = fs.fuse(s2, s3) == fs.conjugate(s1)
        if lhs != rhs:
            out.append(Violation(
                "fusion-conjugation-compatible", (s1, s2, s3),
                f"{s1}.{s2} = conj({s3}) is {lhs} but {s2}.{s3} = conj({s1}) is {rhs}"))
    if fs.has_parity:
        out.extend(_parity_violations(fs))
    return ValidationReport(out)


# ----------------------------------------------------------------------
# file grammar
#
#   # comment
#   letters: <tok> <tok> ...
#   conj: <tok>=<tok> ...          every letter must appear on a left side
#   fusion: <tok>.<tok>=<tok> ...  absent pairs mean the empty result
#   parity: <tok>=odd|even ...     optional; all letters or none

def parse_fusion_set(text: str) -> FusionSet:
    """Parse fusion-set source text.

    The result is structurally checked but the axioms are *not* validated;
    run :func:`validate_fusion_set` on it separately.
    """
    letters: list[str] = []
    declared: set[str] = set()
    conj_entries: list[tuple[int, str, str]] = []
    fusion_entries: list[tuple[int, str, str, str]] = []
    parity_entries: list[tuple[int, str, int]] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, sep, rest = line.partition(":")
        if not sep:
            raise FusionSetError("expected '<directive>: ...'", lineno)
        directive = head.strip()
        items = rest.split()
        if directive == "letters":
            for tok in items:
                if not _TOKEN_RE.match(tok):
                    raise FusionSetError(f"illegal letter token {tok!r}", lineno)
                if tok in declared:
                    raise FusionSetError(f"duplicate letter {tok!r}", lineno)
                declared.add(tok)
                letters.append(tok)
        elif directive == "conj":
            for item in items:
                a, sep2, b = item.partition("=")
                if not (sep2 and a and b):
                    raise FusionSetError(f"bad conjugation entry {item!r} (want a=b)", lineno)
                conj_entries.append((lineno, a, b))
        elif directive == "fusion":
            for item in items:
                lhs, sep2, c = item.partition("=")
                a, sep3, b = lhs.partition(".")
                if not (sep2 and sep3 and a and b and c):
                    raise FusionSetError(f"bad fusion entry {item!r} (want a.b=c)", lineno)
                fusion_entries.append((lineno, a, b, c))
        elif directive == "parity":
            for item in items:
                tok, sep2, p = item.partition("=")
                if not sep2 or p not in _PARITY_NAMES:
                    raise FusionSetError(
                        f"bad parity entry {item!r} (want <letter>=odd|even)", lineno)
                parity_entries.append((lineno, tok, _PARITY_NAMES[p]))
        else:
            raise FusionSetError(f"unknown directive {directive!r}", lineno)

    conj: dict[str, str] = {}
    for lineno, a, b in conj_entries:
        for tok in (a, b):
            if tok not in declared:
                raise FusionSetError(f"conjugation {a}={b} uses unknown letter {tok!r}", lineno)
        if a in conj:
            raise FusionSetError(f"conjugation of {a!r} given twice", lineno)
        conj[a] = b

    fusion: dict[tuple[str, str], str] = {}
    for lineno, a, b, c in fusion_entries:
        for tok in (a, b, c):
            if tok not in declared:
                raise FusionSetError(f"fusion {a}.{b}={c} uses unknown letter {tok!r}", lineno)
        if (a, b) in fusion:
            raise FusionSetError(f"fusion of {a}.{b} given twice", lineno)
        fusion[(a, b)] = c

    parity: dict[str, int] = {}
    for lineno, tok, p in parity_entries:
        if tok not in declared:
            raise FusionSetError(f"parity given for unknown letter {tok!r}", lineno)
        if tok in parity:
            raise FusionSetError(f"parity of {tok!r} given twice", lineno)
        parity[tok] = p

    return FusionSet(letters, fusion, conj, parity or None)


def fusion_set_to_text(fs: FusionSet) -> str:
    """Serialize back to the file grammar; parsing the result round-trips."""
    lines = ["letters: " + " ".join(fs.letters)]
    lines.append("conj: " + " ".join(f"{s}={fs.conjugate(s)}" for s in fs.letters))
    pairs = sorted(fs.fusion, key=lambda ab: (fs.letter_index(ab[0]), fs.letter_index(ab[1])))
    if pairs:
        lines.append("fusion: " + " ".join(f"{a}.{b}={fs.fusion[(a, b)]}" for a, b in pairs))
    if fs.has_parity:
        lines.append("parity: " + " ".join(
            f"{s}={_PARITY_TOKENS[fs.parity_of(s)]}" for s in fs.letters))
    return "\n".join(lines) + "\n"
