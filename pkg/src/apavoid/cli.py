"""Command-line surface: gen, check, search, grid.

Exit codes: 0 success, 1 property violation (repetition found, search cap
or budget hit, infeasible region), 2 usage or input errors. All output is
newline-terminated ASCII and deterministic for a given flag set.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import lattice, words
from .repetition import Differences, find_repetition
from .search import AvoidanceProblem, backtrack_longest, confirm_unavoidable
from .words import FoldingSequence, Word


class UsageError(ValueError):
    pass


def parse_threshold(text: str) -> tuple[Fraction, bool]:
    """Exact rational with optional trailing + for a strict comparison."""
    strict = text.endswith("+")
    if strict:
        text = text[:-1]
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot parse threshold {text!r}; expected forms like 2, 7/4, 2+")
    if value < 1:
        raise UsageError("threshold must be at least 1")
    return value, strict


def parse_diffs(text: str) -> Differences:
    if text == "odd":
        return Differences.odd()
    if text == "all":
        return Differences.all()
    try:
        j = int(text)
    except ValueError:
        raise UsageError(f"--diffs must be odd, all, or a positive integer, not {text!r}")
    if j < 1:
        raise UsageError("--diffs difference must be at least 1")
    return Differences.exactly(j)


# word name -> (needs folds, builder)
_GENERATORS = {
    "paperfolding": (True, words.paperfolding_prefix),
    "v": (True, words.four_letter_squarefree),
    "overlap3": (True, words.ternary_overlapfree),
    "bigsq2": (True, words.binary_large_squarefree),
    "carpi": (False, None),
}

# construction -> (component builder, default threshold text, default min period)
_CONSTRUCTIONS = {
    "product16": (words.four_letter_squarefree, "2", 1),
    "paperfold4": (words.paperfolding_prefix, "3+", 1),
    "overlap9": (words.ternary_overlapfree, "2+", 1),
    "bigsq4": (words.binary_large_squarefree, "2", 3),
}


def _cmd_gen(args: argparse.Namespace) -> int:
    needs_folds, builder = _GENERATORS[args.word]
    if args.length < 0:
        raise UsageError("--length must be nonnegative")
    if not needs_folds:
        if args.folds is not None:
            raise UsageError("the carpi word is fixed; --folds does not apply")
        w = words.carpi_word(args.length)
    else:
        if args.folds is None:
            raise UsageError(f"--folds is required for {args.word}")
        w = builder(FoldingSequence.parse(args.folds), args.length)
    print(words.present(w, args.word))
    return 0


def _read_word(source: str) -> Word:
    if source == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(source, "r", encoding="ascii") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {source}: {exc}")
    return Word.from_text("".join(text.split()))


def _cmd_check(args: argparse.Namespace) -> int:
    w = _read_word(args.input)
    threshold, strict = parse_threshold(args.threshold)
    if args.min_period < 1:
        raise UsageError("--min-period must be at least 1")
    report = find_repetition(w, threshold, strict=strict, min_period=args.min_period,
                             differences=parse_diffs(args.diffs))
    if report is None:
        print("ok")
        return 0
    print(report.to_line())
    return 1


def _cmd_search(args: argparse.Namespace) -> int:
    threshold, strict = parse_threshold(args.threshold)
    diffs = parse_diffs(args.diffs)
    if args.budget is not None:
        verdict = confirm_unavoidable(args.alphabet, threshold, diffs, strict=strict,
                                      min_period=args.min_period, node_budget=args.budget)
        if verdict.status == "budget_exhausted":
            print(f"budget_exhausted nodes={verdict.nodes}")
            return 1
        print(f"max_length={verdict.max_length}")
        print(f"nodes={verdict.nodes}")
        return 0
    problem = AvoidanceProblem(args.alphabet, threshold, diffs, strict=strict,
                               min_period=args.min_period, length_cap=args.length_cap)
    result = backtrack_longest(problem, canonical=args.canonical)
    print(f"max_length={result.max_length}")
    if result.capped:
        print("cap_reached")
        return 1
    for w in result.maximal_words:
        print(w.to_text())
    return 0


def _cmd_grid(args: argparse.Namespace) -> int:
    if args.size < 1:
        raise UsageError("--size must be at least 1")
    if args.construction is not None:
        builder, thr_text, default_mp = _CONSTRUCTIONS[args.construction]
        threshold, strict = parse_threshold(args.threshold or thr_text)
        min_period = args.min_period if args.min_period is not None else default_mp
        component = builder(FoldingSequence.parse(args.folds), args.size)
        grid = lattice.product_grid(component, component)
    else:
        threshold, strict = parse_threshold(args.threshold or "2")
        min_period = args.min_period if args.min_period is not None else 1
        outcome = lattice.grid_search(args.search_alphabet, threshold, args.size,
                                      strict=strict, min_period=min_period,
                                      max_direction=args.max_direction,
                                      node_budget=args.budget)
        print(outcome.status)
        print(f"nodes={outcome.nodes}")
        if outcome.status != "satisfiable":
            return 1
        grid = outcome.witness
        sys.stdout.write(grid.to_text())

    if args.out:
        try:
            lattice.export_ppm(grid, args.out)
        except OSError as exc:
            raise UsageError(f"cannot write {args.out}: {exc}")
    if args.out_text:
        try:
            with open(args.out_text, "w", encoding="ascii") as fh:
                fh.write(grid.to_text())
        except OSError as exc:
            raise UsageError(f"cannot write {args.out_text}: {exc}")

    if args.construction is not None:
        if args.verify:
            max_direction = args.max_direction if args.max_direction is not None else 8
            hit = lattice.verify_grid(grid, threshold, strict=strict, min_period=min_period,
                                      max_direction=max_direction, threads=args.threads)
            if hit is not None:
                spec, report = hit
                print(f"line row={spec.row} col={spec.col} drow={spec.drow} "
                      f"dcol={spec.dcol} count={spec.count} :: {report.to_line()}")
                return 1
            print("ok")
        elif not args.out and not args.out_text:
            sys.stdout.write(grid.to_text())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="apavoid",
        description="Repetition avoidance in arithmetic progressions: "
                    "word generators, checkers, exhaustive searches, lattice tools.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="print a prefix of one of the constructed words")
    p.add_argument("--word", required=True, choices=sorted(_GENERATORS))
    p.add_argument("--folds", default=None,
                   help="folding instructions: a 0/1 string or 'ordinary'")
    p.add_argument("--length", type=int, required=True)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("check", help="scan a word for repetitions in progressions")
    p.add_argument("--input", required=True, help="file of symbol digits, or - for stdin")
    p.add_argument("--threshold", required=True, help="exact rational, + suffix for strict")
    p.add_argument("--min-period", type=int, default=1)
    p.add_argument("--diffs", default="all", help="odd, all, or a single difference")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("search", help="exact longest words avoiding the repetitions")
    p.add_argument("--alphabet", type=int, required=True)
    p.add_argument("--threshold", required=True)
    p.add_argument("--min-period", type=int, default=1)
    p.add_argument("--diffs", default="all")
    p.add_argument("--length-cap", type=int, default=None)
    p.add_argument("--budget", type=int, default=None,
                   help="switch to bounded confirmation under this node budget")
    p.add_argument("--canonical", action="store_true",
                   help="search up to symbol renaming, expand afterwards")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("grid", help="build, verify, search, and export 2D labelings")
    target = p.add_mutually_exclusive_group(required=True)
    target.add_argument("--construction", choices=sorted(_CONSTRUCTIONS))
    target.add_argument("--search-alphabet", type=int)
    p.add_argument("--size", type=int, required=True, help="square region side")
    p.add_argument("--folds", default="ordinary")
    p.add_argument("--threshold", default=None,
                   help="override the construction default")
    p.add_argument("--min-period", type=int, default=None)
    p.add_argument("--max-direction", type=int, default=None,
                   help="direction cap; verify defaults to 8, search to size-1")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--budget", type=int, default=10**8)
    p.add_argument("--out", default=None, help="write a PPM image here")
    p.add_argument("--out-text", default=None, help="write the text serialization here")
    p.set_defaults(func=_cmd_grid)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
