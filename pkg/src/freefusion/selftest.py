"""Acceptance checks with independent oracles.

Each check recomputes its expected values from scratch - closed forms,
classical recursions, brute-force enumeration - and compares them with what
the library produces.  The command-line ``selftest`` verb and the test suite
both run these.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass

from .complexify import complexify
from .fusion_sets import EMPTY_WORD, FusionSet, validate_fusion_set
from .models import (CHARACTER_MODELS, MODEL_TOKENS, N, free_orthogonal_set,
                     fundamental_character_check, hyperoctahedral_set, model,
                     quantum_permutation_set)
from .partitions import enumerate_partitions, span_rank
from .poly import IntPoly
from .repring import ComplexifiedEmbedding
from .ring import RingElement, monomial_expand, word_to_generators


@dataclass
class CheckResult:
    number: int
    title: str
    ok: bool
    detail: str
    seconds: float


# ----------------------------------------------------------------------
# 1. the complexified hyperoctahedral set matches the known 4-letter table

_UVPQ_TABLE = {
    ("u", "u"): None, ("u", "v"): "q", ("u", "p"): "u", ("u", "q"): None,
    ("v", "u"): "p", ("v", "v"): None, ("v", "p"): None, ("v", "q"): "v",
    ("p", "u"): None, ("p", "v"): "v", ("p", "p"): "p", ("p", "q"): None,
    ("q", "u"): "u", ("q", "v"): None, ("q", "p"): None, ("q", "q"): "q",
}
_UVPQ_CONJ = {"u": "v", "v": "u", "p": "p", "q": "q"}
_UVPQ_RELABEL = {"u_odd1": "u", "u_odd2": "v", "p_even1": "q", "p_even2": "p"}


def check_complexified_table():
    cs = complexify(hyperoctahedral_set())
    fs = cs.fusion_set
    if sorted(fs.letters) != sorted(_UVPQ_RELABEL):
        return False, f"unexpected letters {fs.letters}"
    bad = []
    for a in fs.letters:
        for b in fs.letters:
            got = fs.fuse(a, b)
            want = _UVPQ_TABLE[(_UVPQ_RELABEL[a], _UVPQ_RELABEL[b])]
            if (None if got is None else _UVPQ_RELABEL[got]) != want:
                bad.append(f"{_UVPQ_RELABEL[a]}.{_UVPQ_RELABEL[b]}")
    for a in fs.letters:
        if _UVPQ_RELABEL[fs.conjugate(a)] != _UVPQ_CONJ[_UVPQ_RELABEL[a]]:
            bad.append(f"conj({_UVPQ_RELABEL[a]})")
    if bad:
        return False, "mismatched cells: " + ", ".join(bad)
    return True, "all 16 fusion cells and the conjugation match"


# ----------------------------------------------------------------------
# 2. dimension identities for the fundamental times its conjugate

def check_fundamental_square_dims():
    m = model("ak")
    rows = dict(m.decompose_power(("U", "Ubar")))
    expected = {
        ("u_odd1", "u_odd2"): (1, N * N - N),
        ("p_even1",): (1, N - 1),
        EMPTY_WORD: (1, IntPoly.const(1)),
    }
    if set(rows) != set(expected):
        return False, f"labels {sorted(map(str, rows))}"
    total = IntPoly()
    for label, (mult, dim) in expected.items():
        if rows[label] != mult:
            return False, f"multiplicity of {label} is {rows[label]}"
        got = m.ring.dim(label)
        if got != dim:
            return False, f"dim({label}) = {got} != {dim}"
        total = total + mult * got
    if total != N * N:
        return False, f"dimensions sum to {total}, not n^2"
    return True, "three summands with dims n^2 - n, n - 1, 1 adding to n^2"


# ----------------------------------------------------------------------
# 3. decompositions over the complexified set agree with the free-product
#    recursion, for all short word pairs

def check_complexified_crosscheck(max_len: int = 3):
    checked = 0
    bad = []
    for source in (hyperoctahedral_set(), free_orthogonal_set()):
        cs = complexify(source)
        embedding = ComplexifiedEmbedding(cs)
        words = list(cs.fusion_set.iter_words(max_len))
        for x in words:
            for y in words:
                report = embedding.crosscheck_product(x, y)
                checked += 1
                if not report.ok:
                    bad.append(f"{'.'.join(x) or '1'} * {'.'.join(y) or '1'}")
    if bad:
        return False, f"{len(bad)} of {checked} pairs disagree: " + "; ".join(bad[:5])
    return True, f"both routes agree on all {checked} word pairs"


# ----------------------------------------------------------------------
# 4. the generator basis change round-trips and is unitriangular

def check_generator_basis_change(max_len: int = 6):
    count = 0
    for fs in (free_orthogonal_set(), quantum_permutation_set(), hyperoctahedral_set()):
        for word in fs.iter_words(max_len):
            count += 1
            comb = word_to_generators(fs, word)
            if comb.expand() != RingElement.basis(fs, word):
                return False, f"round trip fails for {word}"
            if comb.terms.get(word) != 1:
                return False, f"leading generator coefficient of {word} is not 1"
            if any(len(seq) >= len(word) for seq in comb.terms if seq != word):
                return False, f"non-leading sequence of {word} is not shorter"
            expansion = monomial_expand(fs, word)
            if expansion.coefficient(word) != 1:
                return False, f"leading word coefficient of {word} is not 1"
            if any(len(w) >= len(word) for w in expansion.terms if w != word):
                return False, f"expansion of {word} has a non-leading long term"
    return True, f"identity and unitriangularity on {count} words"


# ----------------------------------------------------------------------
# 5. associativity on valid sets, non-associativity on an invalid one

def _random_involution(rng: random.Random, letters):
    pool = list(letters)
    rng.shuffle(pool)
    conj = {}
    while pool:
        a = pool.pop()
        if pool and rng.random() < 0.5:
            b = pool.pop()
            conj[a], conj[b] = b, a
        else:
            conj[a] = a
    return conj


def random_valid_fusion_sets(count: int, seed: int, max_attempts: int = 100000):
    """Rejection-sample structurally random fusion sets that pass validation.

    Sparse fusion maps are favoured because dense random ones almost never
    satisfy the compatibility axiom.
    """
    rng = random.Random(seed)
    found = []
    attempts = 0
    while len(found) < count:
        attempts += 1
        if attempts > max_attempts:
            raise RuntimeError("could not generate enough valid fusion sets")
        size = rng.randint(1, 3)
        letters = tuple("abc"[:size])
        conj = _random_involution(rng, letters)
        density = rng.choice((0.0, 0.15, 0.35))
        fusion = {}
        for a in letters:
            for b in letters:
                if rng.random() < density:
                    fusion[(a, b)] = rng.choice(letters)
        fs = FusionSet(letters, fusion, conj)
        if validate_fusion_set(fs).ok:
            found.append(fs)
    return found


def incompatible_example_set() -> FusionSet:
    """Two letters with a.a = b and nothing else; fails the compatibility
    axiom with witness (a, a, b)."""
    return FusionSet(("a", "b"), {("a", "a"): "b"}, {"a": "a", "b": "b"})


def _associativity_failures(fs: FusionSet, max_len: int):
    words = list(fs.iter_words(max_len))
    failures = []
    for x, y, z in itertools.product(words, repeat=3):
        ax, ay, az = (RingElement.basis(fs, w) for w in (x, y, z))
        if (ax * ay) * az != ax * (ay * az):
            failures.append((x, y, z))
    return failures


def check_associativity(random_sets: int = 100, seed: int = 20240801):
    failures = _associativity_failures(hyperoctahedral_set(), 2)
    if failures:
        return False, f"hyperoctahedral set is non-associative at {failures[0]}"
    triples = 0
    for fs in random_valid_fusion_sets(random_sets, seed):
        failures = _associativity_failures(fs, 2)
        triples += (1 + len(fs.letters) + len(fs.letters) ** 2) ** 3
        if failures:
            return False, f"valid set {fs!r} is non-associative at {failures[0]}"
    bad = incompatible_example_set()
    if validate_fusion_set(bad).ok:
        return False, "the incompatible example set validated as correct"
    letters = [(s,) for s in bad.letters]
    witness = None
    for x, y, z in itertools.product(letters, repeat=3):
        ax, ay, az = (RingElement.basis(bad, w) for w in (x, y, z))
        if (ax * ay) * az != ax * (ay * az):
            witness = (x[0], y[0], z[0])
            break
    if witness is None:
        return False, "no non-associative triple found on the invalid set"
    return True, (f"associative on the hyperoctahedral set and {random_sets} random valid sets "
                  f"({triples} triples); invalid set breaks at {witness}")


# ----------------------------------------------------------------------
# 6. closed form for powers of the single free letter

def _ao_closed_form(fs: FusionSet, k: int, l: int) -> RingElement:
    # sum over j of the word s^(k+l-2j), straight from the closed form
    return RingElement(fs, {("s",) * (k + l - 2 * j): 1 for j in range(min(k, l) + 1)})


def check_free_letter_closed_form(max_power: int = 8):
    fs = free_orthogonal_set()
    for k in range(max_power + 1):
        for l in range(max_power + 1):
            got = RingElement.basis(fs, ("s",) * k) * RingElement.basis(fs, ("s",) * l)
            if got != _ao_closed_form(fs, k, l):
                return False, f"product of s^{k} and s^{l} deviates from the closed form"
    return True, f"matches the closed form for all powers up to {max_power}"


# ----------------------------------------------------------------------
# 7. partition counts against classical recursions, and one exact rank

def catalan_numbers(up_to: int) -> list[int]:
    """Catalan numbers by the convolution recursion."""
    cats = [1]
    for m in range(up_to):
        cats.append(sum(cats[i] * cats[m - i] for i in range(m + 1)))
    return cats


def bell_numbers(up_to: int) -> list[int]:
    """Bell numbers by the Bell triangle."""
    bells = [1]
    row = [1]
    for _ in range(up_to):
        nxt = [row[-1]]
        for value in row:
            nxt.append(nxt[-1] + value)
        bells.append(nxt[0])
        row = nxt
    return bells


def check_partition_counts(nc_max: int = 10, all_max: int = 8):
    cats = catalan_numbers(nc_max)
    bells = bell_numbers(all_max)
    for k in range(nc_max + 1):
        got = len(enumerate_partitions(0, k, noncrossing_only=True))
        if got != cats[k]:
            return False, f"{got} noncrossing partitions of {k} points, expected {cats[k]}"
    for k in range(all_max + 1):
        got = len(enumerate_partitions(0, k))
        if got != bells[k]:
            return False, f"{got} partitions of {k} points, expected {bells[k]}"
    rank = span_rank(enumerate_partitions(0, 4, noncrossing_only=True), 4)
    if rank != 14:
        return False, f"span rank at (0,4), n=4 is {rank}, expected 14"
    return True, (f"noncrossing counts match Catalan up to {nc_max} (C{nc_max}={cats[nc_max]}), "
                  f"full counts match Bell up to {all_max} (B{all_max}={bells[all_max]}), rank 14")


# ----------------------------------------------------------------------
# 8. the fundamental of each combination model splits off a character

def check_fundamental_characters():
    details = []
    for token in CHARACTER_MODELS:
        report = fundamental_character_check(model(token))
        if not report.ok:
            return False, str(report)
        details.append(token)
    return True, "character found and verified for " + ", ".join(details)


# ----------------------------------------------------------------------
# 9. dimension conservation across all models and short patterns

def _patterns(max_len: int):
    for length in range(1, max_len + 1):
        yield from itertools.product(("U", "Ubar"), repeat=length)


def check_dimension_conservation(max_len: int = 4):
    count = 0
    for token in MODEL_TOKENS:
        m = model(token)
        for pattern in _patterns(max_len):
            total = IntPoly()
            for label, mult in m.decompose_power(pattern):
                total = total + mult * m.ring.dim(label)
            if total != N ** len(pattern):
                return False, f"{token} pattern {' '.join(pattern)} sums to {total}"
            count += 1
    return True, f"dimension sums equal n^len for {count} model/pattern combinations"


# ----------------------------------------------------------------------
# 10. no trivial summand in odd tensor powers of the complexified model

def check_odd_power_triviality(max_len: int = 5):
    m = model("ak")
    count = 0
    for pattern in _patterns(max_len):
        if len(pattern) % 2 == 0:
            continue
        rows = dict(m.decompose_power(pattern))
        if m.ring.trivial in rows:
            return False, f"trivial appears in odd pattern {' '.join(pattern)}"
        count += 1
    return True, f"trivial absent from all {count} odd patterns up to length {max_len}"


# ----------------------------------------------------------------------

ACCEPTANCE_CHECKS = (
    (1, "complexified hyperoctahedral fusion table", check_complexified_table),
    (2, "fundamental-square dimension identities", check_fundamental_square_dims),
    (3, "complexified vs free-product decompositions", check_complexified_crosscheck),
    (4, "generator basis change round trip", check_generator_basis_change),
    (5, "associativity and its failure mode", check_associativity),
    (6, "free-letter power closed form", check_free_letter_closed_form),
    (7, "partition counts and span rank", check_partition_counts),
    (8, "fundamental characters of combination models", check_fundamental_characters),
    (9, "dimension conservation", check_dimension_conservation),
    (10, "odd-power triviality", check_odd_power_triviality),
)


def run_check(number: int) -> CheckResult:
    for num, title, fn in ACCEPTANCE_CHECKS:
        if num == number:
            start = time.perf_counter()
            ok, detail = fn()
            return CheckResult(num, title, ok, detail, time.perf_counter() - start)
    raise ValueError(f"no acceptance check numbered {number}")


def run_all() -> list[CheckResult]:
    return [run_check(num) for num, _, _ in ACCEPTANCE_CHECKS]
