"""Free complexification of a parity-graded fusion set.

Every letter of the source set is doubled and tracked as a circle-decorated
copy: an even letter occurs plainly (block ``even1``) or conjugated on both
sides (``even2``), an odd letter with the decoration on the right (``odd1``)
or on the left (``odd2``).  A block is encoded by its pair of decoration
exponents, with -1 standing for a starred decoration:

    even1 = (0, 0)    even2 = (-1, +1)    odd1 = (0, +1)    odd2 = (-1, 0)

Two decorated letters fuse exactly when the inner exponents cancel; the base
letters then fuse in the source set and the surviving outer exponents name
the block of the result.  Deriving the table from this bookkeeping (rather
than transcribing a printed one) keeps the construction unambiguous.
"""

from __future__ import annotations

from .fusion_sets import (EVEN, FusionSet, FusionSetError, ValidationReport,
                          Word, _parity_violations, validate_fusion_set)

EVEN1, EVEN2, ODD1, ODD2 = "even1", "even2", "odd1", "odd2"
BLOCKS = (EVEN1, EVEN2, ODD1, ODD2)

# block -> (left decoration exponent, right decoration exponent)
BLOCK_EXPONENTS = {EVEN1: (0, 0), EVEN2: (-1, 1), ODD1: (0, 1), ODD2: (-1, 0)}
_BLOCK_OF = {exps: block for block, exps in BLOCK_EXPONENTS.items()}

# conjugation reverses and negates the decorations
BLOCK_CONJ = {EVEN1: EVEN1, EVEN2: EVEN2, ODD1: ODD2, ODD2: ODD1}


def block_parity(block: str) -> int:
    pre, suf = BLOCK_EXPONENTS[block]
    return (pre + suf) % 2


def validate_parity(fs: FusionSet) -> ValidationReport:
    """Report every failure of the parity map to be a grading.

    The map must be invariant under conjugation and additive mod 2 under
    fusion; a missing parity map is an error, not a report entry.
    """
    if not fs.has_parity:
        raise FusionSetError("fusion set carries no parity map")
    return ValidationReport(_parity_violations(fs))


class ComplexifiedSet:
    """The four-block fusion set built from a graded source set.

    ``fusion_set`` is an ordinary :class:`FusionSet` whose letter tokens are
    ``<base>_<block>``; this wrapper keeps the bookkeeping back to the source.
    """

    def __init__(self, source: FusionSet, fusion_set: FusionSet, base_map):
        self.source = source
        self.fusion_set = fusion_set
        self._base: dict[str, tuple[str, str]] = dict(base_map)
        self._token = {pair: tok for tok, pair in self._base.items()}

    @property
    def letters(self) -> tuple[str, ...]:
        return self.fusion_set.letters

    def base_of(self, token: str) -> str:
        return self._base[token][0]

    def block_of(self, token: str) -> str:
        return self._base[token][1]

    def letter(self, base: str, block: str) -> str:
        return self._token[(base, block)]

    def prefix_exponent(self, token: str) -> int:
        return BLOCK_EXPONENTS[self.block_of(token)][0]

    def suffix_exponent(self, token: str) -> int:
        return BLOCK_EXPONENTS[self.block_of(token)][1]

    def connects(self, left_token: str, right_token: str) -> bool:
        """Whether two adjacent letters keep a word connected, i.e. the inner
        decoration exponents cancel."""
        return self.suffix_exponent(left_token) + self.prefix_exponent(right_token) == 0

    def base_word(self, word: Word) -> Word:
        return tuple(self.base_of(t) for t in word)

    def __repr__(self):
        return f"<ComplexifiedSet over {self.source!r}>"


def complexify(fs: FusionSet) -> ComplexifiedSet:
    """Build the free complexification of a validly graded fusion set.

    The source must carry a parity map that is a grading and must itself be
    a valid fusion set; failures raise with the full validation report.  The
    output satisfies all fusion-set axioms and is graded by block parity.
    """
    report = validate_parity(fs)
    if not report.ok:
        raise FusionSetError("parity is not a grading:\n" + str(report))
    base_report = validate_fusion_set(fs)
    if not base_report.ok:
        raise FusionSetError("source fusion set is invalid:\n" + str(base_report))

    base_map: dict[str, tuple[str, str]] = {}
    letters: list[str] = []
    for s in fs.letters:
        blocks = (EVEN1, EVEN2) if fs.parity_of(s) == EVEN else (ODD1, ODD2)
        for block in blocks:
            tok = f"{s}_{block}"
            letters.append(tok)
            base_map[tok] = (s, block)

    conj = {
        tok: f"{fs.conjugate(base)}_{BLOCK_CONJ[block]}"
        for tok, (base, block) in base_map.items()
    }

    fusion: dict[tuple[str, str], str] = {}
    for ta, (a, block_a) in base_map.items():
        pre_a, suf_a = BLOCK_EXPONENTS[block_a]
        for tb, (b, block_b) in base_map.items():
            pre_b, suf_b = BLOCK_EXPONENTS[block_b]
            if suf_a + pre_b != 0:
                continue
            c = fs.fuse(a, b)
            if c is None:
                continue
            fusion[(ta, tb)] = f"{c}_{_BLOCK_OF[(pre_a, suf_b)]}"

    parity = {tok: block_parity(block) for tok, (_, block) in base_map.items()}
    return ComplexifiedSet(fs, FusionSet(letters, fusion, conj, parity), base_map)
