"""Command-line front end.

Tab-separated results go to standard output, diagnostics to standard error.
Exit status: 0 on success, 1 on validation or check failure (including size
caps), 2 on usage errors.  Output is byte-identical across runs on identical
inputs.
"""

from __future__ import annotations

import argparse
import sys

from . import selftest
from .complexify import complexify
from .fusion_sets import (FusionSet, FusionSetError, fusion_set_to_text,
                          parse_fusion_set, validate_fusion_set)
from .models import MODEL_TOKENS, PATTERN_SYMBOLS, model
from .partitions import CapExceeded, enumerate_partitions, span_rank
from .repring import ComplexifiedEmbedding
from .ring import RingElement, monomial_expand, word_to_generators


class UsageError(Exception):
    """Bad command-line arguments, reported with exit status 2."""


def _load_fusion_set(path: str) -> FusionSet:
    try:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_fusion_set(text)


def _parse_word(fs: FusionSet, text: str, argname: str, allow_unit: bool = False):
    if text == "1" and allow_unit:
        return ()
    if not text:
        raise UsageError(f"argument {argname}: empty word")
    tokens = text.split(".")
    if any(not tok for tok in tokens):
        raise UsageError(f"argument {argname}: malformed word {text!r}")
    for tok in tokens:
        if tok not in fs:
            raise UsageError(f"argument {argname}: unknown letter {tok!r}")
    return tuple(tokens)


def _render_word(word) -> str:
    return ".".join(word) if word else "1"


def _cmd_validate(args) -> int:
    report = validate_fusion_set(_load_fusion_set(args.file))
    if report.ok:
        print("valid")
        return 0
    for v in report.violations:
        print(f"violation\t{v.axiom}\t{','.join(v.witness)}\t{v.message}")
    return 1


def _cmd_fuse(args) -> int:
    fs = _load_fusion_set(args.file)
    left = _parse_word(fs, args.left, "LEFT")
    right = _parse_word(fs, args.right, "RIGHT")
    fused = fs.word_fuse(left, right)
    print("empty" if fused is None else _render_word(fused))
    return 0


def _cmd_product(args) -> int:
    fs = _load_fusion_set(args.file)
    left = _parse_word(fs, args.left, "LEFT", allow_unit=True)
    right = _parse_word(fs, args.right, "RIGHT", allow_unit=True)
    print(RingElement.basis(fs, left) * RingElement.basis(fs, right))
    return 0


def _cmd_expand(args) -> int:
    fs = _load_fusion_set(args.file)
    word = _parse_word(fs, args.word, "WORD", allow_unit=True)
    expansion = monomial_expand(fs, word)
    combination = word_to_generators(fs, word)
    gens = "*".join(f"a[{s}]" for s in word) if word else "1"
    print(f"monomials\t{gens}\t{expansion}")
    print(f"generators\ta[{_render_word(word)}]\t{combination}"
          if word else f"generators\t1\t{combination}")
    return 0


def _cmd_complexify(args) -> int:
    cs = complexify(_load_fusion_set(args.file))
    sys.stdout.write(fusion_set_to_text(cs.fusion_set))
    return 0


def _get_model(name: str):
    try:
        return model(name)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _parse_pattern(symbols) -> tuple:
    for sym in symbols:
        if sym not in PATTERN_SYMBOLS:
            raise UsageError(f"argument PATTERN: bad symbol {sym!r} (want U or Ubar)")
    return tuple(symbols)


def _cmd_decompose(args) -> int:
    m = _get_model(args.model)
    pattern = _parse_pattern(args.pattern)
    for label, mult in m.decompose_power(pattern):
        print(f"{m.ring.label_repr(label)}\t{mult}\t{m.ring.dim(label)}")
    return 0


def _cmd_dims(args) -> int:
    m = _get_model(args.model)
    if args.max_len < 1:
        raise UsageError("argument --max-len: must be at least 1")
    if args.eval_n is not None and args.eval_n < 4:
        print(f"warning: n={args.eval_n} is below 4; the fusion rules may not "
              "describe the named quantum group there", file=sys.stderr)
    fund = [label for label, _ in m.fundamental]
    fund += [label for label, _ in m.conjugate_fundamental()]
    known = {label: m.ring.dim(label) for label in fund}
    frontier = list(known)
    for _ in range(args.max_len - 1):
        nxt = []
        for x in frontier:
            for f in fund:
                for label in m.ring.decompose_pair(x, f):
                    if label not in known:
                        known[label] = m.ring.dim(label)
                        nxt.append(label)
        frontier = nxt
    for label in sorted(known, key=m.ring.sort_key):
        dim = known[label]
        text = str(dim(args.eval_n)) if args.eval_n is not None else str(dim)
        print(f"{m.ring.label_repr(label)}\t{text}")
    return 0


def _cmd_partitions(args) -> int:
    if args.k < 0 or args.l < 0:
        raise UsageError("point counts must be non-negative")
    parts = enumerate_partitions(args.k, args.l, noncrossing_only=args.nc)
    print(len(parts))
    for p in parts:
        print(p.render())
    return 0


def _cmd_rank(args) -> int:
    if args.k < 0 or args.l < 0:
        raise UsageError("point counts must be non-negative")
    if args.n < 1:
        raise UsageError("argument --n: must be at least 1")
    parts = enumerate_partitions(args.k, args.l, noncrossing_only=args.nc)
    print(span_rank(parts, args.n))
    return 0


def _cmd_crosscheck(args) -> int:
    if args.max_len < 0:
        raise UsageError("argument --max-len: must be non-negative")
    cs = complexify(_load_fusion_set(args.file))
    embedding = ComplexifiedEmbedding(cs)
    words = list(cs.fusion_set.iter_words(args.max_len))
    mismatches = 0
    for x in words:
        for y in words:
            report = embedding.crosscheck_product(x, y)
            if not report.ok:
                mismatches += 1
                print(f"mismatch\t{_render_word(x)}\t{_render_word(y)}\t"
                      f"{report.render(embedding.product_ring)}")
    print(f"pairs\t{len(words) ** 2}")
    print(f"mismatches\t{mismatches}")
    return 1 if mismatches else 0


def _cmd_selftest(args) -> int:
    results = selftest.run_all()
    failed = 0
    for r in results:
        status = "PASS" if r.ok else "FAIL"
        print(f"{status}\tcriterion {r.number}\t{r.title}\t{r.detail}")
        print(f"criterion {r.number} took {r.seconds:.2f}s", file=sys.stderr)
        if not r.ok:
            failed += 1
    return 1 if failed else 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="freefusion",
        description="Exact fusion rules for orthogonal free quantum groups "
                    "and their free complexifications.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("validate", help="check the axioms of a fusion-set file")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_validate)

    p = sub.add_parser("fuse", help="fuse two non-empty words")
    p.add_argument("file")
    p.add_argument("left", metavar="LEFT")
    p.add_argument("right", metavar="RIGHT")
    p.set_defaults(handler=_cmd_fuse)

    p = sub.add_parser("product", help="ring product of two basis words (1 is the unit)")
    p.add_argument("file")
    p.add_argument("left", metavar="LEFT")
    p.add_argument("right", metavar="RIGHT")
    p.set_defaults(handler=_cmd_product)

    p = sub.add_parser("expand", help="basis change between words and generator products")
    p.add_argument("file")
    p.add_argument("word", metavar="WORD")
    p.set_defaults(handler=_cmd_expand)

    p = sub.add_parser("complexify", help="emit the complexified fusion-set file")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_complexify)

    p = sub.add_parser("decompose", help="decompose a tensor pattern of the fundamental")
    p.add_argument("model", metavar="MODEL", help=" ".join(MODEL_TOKENS))
    p.add_argument("pattern", metavar="PATTERN", nargs="+", help="sequence of U / Ubar")
    p.set_defaults(handler=_cmd_decompose)

    p = sub.add_parser("dims", help="dimension table of reachable classes")
    p.add_argument("model", metavar="MODEL")
    p.add_argument("--max-len", type=int, required=True, metavar="K")
    p.add_argument("--eval-n", type=int, default=None, metavar="N")
    p.set_defaults(handler=_cmd_dims)

    p = sub.add_parser("partitions", help="enumerate two-row partitions")
    p.add_argument("k", type=int)
    p.add_argument("l", type=int)
    p.add_argument("--nc", action="store_true", help="noncrossing only")
    p.set_defaults(handler=_cmd_partitions)

    p = sub.add_parser("rank", help="exact rank of the span of partition maps")
    p.add_argument("k", type=int)
    p.add_argument("l", type=int)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--nc", action="store_true", help="noncrossing only")
    p.set_defaults(handler=_cmd_rank)

    p = sub.add_parser("crosscheck", help="compare complexified and free-product decompositions")
    p.add_argument("file")
    p.add_argument("--max-len", type=int, default=3, metavar="K")
    p.set_defaults(handler=_cmd_crosscheck)

    p = sub.add_parser("selftest", help="run every acceptance check")
    p.set_defaults(handler=_cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FusionSetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
