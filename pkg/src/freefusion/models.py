"""Catalog of the orthogonal free quantum groups, their combinatorial
variants, and their free complexifications, realized as representation rings
with a distinguished fundamental class.

The models are constructed on the decomposed side of the known isomorphisms
(free products, direct products, one-size-down rings), which is the level at
which their fusion rules are computable.  Every fundamental is an n-by-n
class: the dimensions sum to n as polynomials.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .complexify import ODD1, complexify
from .fusion_sets import EMPTY_WORD, EVEN, ODD, FusionSet
from .poly import IntPoly
from .repring import (CircleRing, Cyclic2Ring, DirectProductRing,
                      FreeProductRing, RepRing, WordRing)
from .ring import DimensionAssignment

N = IntPoly.var()

MODEL_TOKENS = ("ao", "as", "ah", "ab", "abp", "asp", "apf", "ac", "ak")

PATTERN_SYMBOLS = ("U", "Ubar")


def free_orthogonal_set() -> FusionSet:
    """One self-conjugate letter with empty fusion (SU(2)-type rules)."""
    return FusionSet(("s",), {}, {"s": "s"}, {"s": ODD})


def quantum_permutation_set() -> FusionSet:
    """One self-conjugate idempotent letter."""
    return FusionSet(("p",), {("p", "p"): "p"}, {"p": "p"})


def hyperoctahedral_set() -> FusionSet:
    """Letters u, p with u.u = p.p = p, u.p = p.u = u, trivial conjugation."""
    return FusionSet(
        ("u", "p"),
        {("u", "u"): "p", ("u", "p"): "u", ("p", "u"): "u", ("p", "p"): "p"},
        {"u": "u", "p": "p"},
        {"u": ODD, "p": EVEN},
    )


@dataclass
class Model:
    """A representation ring plus the class of the fundamental corepresentation."""

    name: str
    ring: RepRing
    fundamental: tuple[tuple[object, int], ...]

    @property
    def fund_dim(self) -> IntPoly:
        total = IntPoly()
        for label, mult in self.fundamental:
            d = self.ring.dim(label)
            if d is None:
                raise ValueError(f"model {self.name} carries no dimension data")
            total = total + mult * d
        return total

    def conjugate_fundamental(self) -> tuple[tuple[object, int], ...]:
        return tuple((self.ring.dual(label), mult) for label, mult in self.fundamental)

    def decompose_power(self, pattern) -> list[tuple[object, int]]:
        """Iterated decomposition of a tensor word in the fundamental (``U``)
        and its conjugate (``Ubar``); deterministic label order."""
        pattern = tuple(pattern)
        if not pattern:
            raise ValueError("pattern must be non-empty")
        for sym in pattern:
            if sym not in PATTERN_SYMBOLS:
                raise ValueError(f"bad pattern symbol {sym!r} (want U or Ubar)")
        current: Counter | None = None
        for sym in pattern:
            fund = self.fundamental if sym == "U" else self.conjugate_fundamental()
            if current is None:
                current = Counter(dict(fund))
                continue
            nxt: Counter = Counter()
            for x, mx in current.items():
                for y, my in fund:
                    for r, mr in self.ring.decompose_pair(x, y).items():
                        nxt[r] += mx * my * mr
            current = nxt
        return self.ring.sorted_multiset(current)


def decompose_fundamental_power(m: Model, pattern) -> list[tuple[object, int]]:
    return m.decompose_power(pattern)


def _one_letter_ring(fs: FusionSet, letter_dim: IntPoly) -> WordRing:
    (letter,) = fs.letters
    return WordRing(fs, DimensionAssignment(fs, {letter: letter_dim}))


def _build_ao(token: str) -> Model:
    ring = _one_letter_ring(free_orthogonal_set(), N)
    return Model(token, ring, ((("s",), 1),))


def _build_as(token: str) -> Model:
    ring = _one_letter_ring(quantum_permutation_set(), N - 1)
    return Model(token, ring, ((EMPTY_WORD, 1), (("p",), 1)))


def _build_ah(token: str) -> Model:
    fs = hyperoctahedral_set()
    ring = WordRing(fs, DimensionAssignment(fs, {"u": N, "p": N - 1}))
    return Model(token, ring, ((("u",), 1),))


def _build_ab(token: str) -> Model:
    # the one-letter ring one size down, with a trivial block on top;
    # dimensions are reported in the ambient n
    ring = _one_letter_ring(free_orthogonal_set(), N - 1)
    return Model(token, ring, ((EMPTY_WORD, 1), (("s",), 1)))


def _build_asp(token: str) -> Model:
    ring = DirectProductRing(_one_letter_ring(quantum_permutation_set(), N - 1), Cyclic2Ring())
    fund = (((EMPTY_WORD, 1), 1), ((("p",), 1), 1))
    return Model(token, ring, fund)


def _build_abp(token: str) -> Model:
    ring = FreeProductRing(_one_letter_ring(free_orthogonal_set(), N - 1), Cyclic2Ring())
    fund = ((ring.label(((1, 1),)), 1), (ring.label(((0, ("s",)),)), 1))
    return Model(token, ring, fund)


def _build_apf(token: str) -> Model:
    ring = FreeProductRing(_one_letter_ring(quantum_permutation_set(), N - 1), CircleRing())
    fund = ((ring.label(((1, 1),)), 1), (ring.label(((0, ("p",)), (1, 1))), 1))
    return Model(token, ring, fund)


def _build_ac(token: str) -> Model:
    ring = FreeProductRing(_one_letter_ring(free_orthogonal_set(), N - 1), CircleRing())
    fund = ((ring.label(((1, 1),)), 1), (ring.label(((0, ("s",)), (1, 1))), 1))
    return Model(token, ring, fund)


def _build_ak(token: str) -> Model:
    complexified = complexify(hyperoctahedral_set())
    fs = complexified.fusion_set
    dims = {tok: (N if complexified.base_of(tok) == "u" else N - 1) for tok in fs.letters}
    ring = WordRing(fs, DimensionAssignment(fs, dims))
    fund = (((complexified.letter("u", ODD1),), 1),)
    return Model(token, ring, fund)


_BUILDERS = {
    "ao": _build_ao,
    "as": _build_as,
    "ah": _build_ah,
    "ab": _build_ab,
    "abp": _build_abp,
    "asp": _build_asp,
    "apf": _build_apf,
    "ac": _build_ac,
    "ak": _build_ak,
}


def model(name: str) -> Model:
    """Construct a model by its command-line token (case-insensitive).

    ``ap`` is accepted as an alias for ``apf``.  Models are built for
    symbolic n; evaluating the polynomials at small n (below 4) may leave the
    regime where these fusion rules describe the named quantum group.
    """
    token = name.lower()
    if token == "ap":
        token = "apf"
    builder = _BUILDERS.get(token)
    if builder is None:
        raise ValueError(
            f"unknown model {name!r}; expected one of: " + " ".join(MODEL_TOKENS))
    m = builder(token)
    assert m.fund_dim == N
    return m


CHARACTER_MODELS = ("asp", "abp", "apf", "ac")
SELF_DUAL_CHARACTER_MODELS = ("asp", "abp")


@dataclass
class CharacterReport:
    """Outcome of searching the fundamental for a one-dimensional character."""

    model: str
    zeta: object | None
    self_dual_required: bool
    problems: list[str]

    @property
    def ok(self) -> bool:
        return self.zeta is not None and not self.problems

    def __str__(self):
        if self.ok:
            return f"{self.model}: found character, all checks pass"
        return f"{self.model}: " + "; ".join(self.problems or ["no character found"])


def fundamental_character_check(m: Model) -> CharacterReport:
    """Check that the fundamental contains a non-trivial one-dimensional class
    whose product with its dual is trivial.

    For the symmetrized models (``asp``, ``abp``) the class must additionally
    be self-dual.  Only the four models whose fundamental splits off such a
    character are in the domain.
    """
    if m.name not in CHARACTER_MODELS:
        raise ValueError(
            f"check applies to {', '.join(CHARACTER_MODELS)}; got {m.name!r}")
    problems: list[str] = []
    zeta = None
    for label, _ in m.fundamental:
        if label != m.ring.trivial and m.ring.dim(label) == IntPoly.const(1):
            zeta = label
            break
    if zeta is None:
        problems.append("fundamental contains no non-trivial one-dimensional class")
    else:
        dual = m.ring.dual(zeta)
        if m.ring.decompose_pair(zeta, dual) != {m.ring.trivial: 1}:
            problems.append("product with the dual is not the trivial class")
        if m.name in SELF_DUAL_CHARACTER_MODELS and dual != zeta:
            problems.append("class is not self-dual")
    return CharacterReport(m.name, zeta, m.name in SELF_DUAL_CHARACTER_MODELS, problems)
