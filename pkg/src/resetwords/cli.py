"""Command-line front end.

Subcommands: ``gen`` (CNF to gadget file), ``exact``, ``greedy``, ``check``
(apply a word), ``verify`` (full claim pipeline) and ``bench`` (CSV table).
Exit codes: 0 pass, 1 check failed, 2 usage or parse error, 3 budget or
capacity limit.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .automata import (DfaFormatError, as_word, image, parse_dfa, serialize_dfa,
                       word_to_text)
from .cnf import CapacityError, DimacsError, parse_dimacs
from .exact import BUDGET_EXCEEDED, FOUND, SearchBudget, min_reset_word
from .gadgets import build_iterated_gadget, serialize_gadget, to_binary
from .greedy import NotSynchronizingError, eppstein_greedy
from .harness import bench_csv, run_bench, run_verification

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_CAPACITY = 3


def _budget(args: argparse.Namespace) -> SearchBudget:
    return SearchBudget(
        max_visited_sets=args.budget_sets,
        max_depth=args.max_depth,
    )


def _add_budget_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--budget-sets", type=int, default=SearchBudget().max_visited_sets,
                        metavar="N", help="cap on distinct visited state sets")
    parser.add_argument("--max-depth", type=int, default=None, metavar="D",
                        help="cap on the searched word length (off by default)")


def cmd_gen(args: argparse.Namespace) -> int:
    formula = parse_dimacs(Path(args.cnf).read_text())
    gadget = build_iterated_gadget(formula, args.r)
    if args.binary:
        gadget = to_binary(gadget)
    text = serialize_gadget(gadget)
    meta = gadget.meta
    summary = (
        f"states {gadget.dfa.num_states}  letters {gadget.dfa.num_letters}  "
        f"n={meta.num_vars} m={meta.num_clauses} r={meta.level} "
        f"binary={'yes' if meta.is_binary else 'no'}"
    )
    if args.output:
        Path(args.output).write_text(text)
        print(summary)
    else:
        sys.stdout.write(text)
        print(summary, file=sys.stderr)
    return EXIT_OK


def cmd_exact(args: argparse.Namespace) -> int:
    dfa = parse_dfa(Path(args.dfa).read_text())
    result = min_reset_word(dfa, _budget(args))
    print(f"status {result.status}")
    if result.status == FOUND:
        print(f"length {result.length}")
        print(f"word {word_to_text(result.word)}")
    print(f"visited-sets {result.visited_sets}")
    print(f"peak-frontier {result.peak_frontier}")
    return EXIT_CAPACITY if result.status == BUDGET_EXCEEDED else EXIT_OK


def cmd_greedy(args: argparse.Namespace) -> int:
    dfa = parse_dfa(Path(args.dfa).read_text())
    try:
        word = eppstein_greedy(dfa)
    except NotSynchronizingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    print(f"length {len(word)}")
    print(f"word {word_to_text(word)}")
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    dfa = parse_dfa(Path(args.dfa).read_text())
    word = as_word(args.word, dfa.num_letters)
    result = image(dfa, range(dfa.num_states), word)
    print(f"image-size {len(result)}")
    return EXIT_OK if len(result) == 1 else EXIT_CHECK_FAILED


def cmd_verify(args: argparse.Namespace) -> int:
    formula = parse_dimacs(Path(args.cnf).read_text())
    report = run_verification(
        formula, instance=Path(args.cnf).name, level=args.r,
        budget=_budget(args), include_binary=args.binary,
    )
    sys.stdout.write(report.format())
    if not report.passed:
        return EXIT_CHECK_FAILED
    if report.budget_limited:
        return EXIT_CAPACITY
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    directory = Path(args.directory)
    paths = sorted(directory.glob("*.cnf"))
    if not paths:
        print(f"error: no .cnf files in {directory}", file=sys.stderr)
        return EXIT_USAGE
    named = []
    for path in paths:
        try:
            named.append((path.stem, parse_dimacs(path.read_text())))
        except (OSError, DimacsError) as exc:
            print(f"warning: skipping {path}: {exc}", file=sys.stderr)
    if not named:
        print("error: every input file failed to parse", file=sys.stderr)
        return EXIT_CHECK_FAILED
    rows = run_bench(named, levels=(2, 3), budget=_budget(args),
                     timing=not args.no_timing)
    text = bench_csv(rows)
    Path(args.csv).write_text(text)
    print(f"wrote {len(rows)} rows to {args.csv}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="resetwords",
        description="Synchronizing automata: gadget generation, exact and greedy "
                    "reset words, claim verification, benchmarks.",
        epilog="exit codes: 0 pass, 1 check failed, 2 usage/parse, 3 budget/capacity",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="build a gadget from a DIMACS CNF file")
    gen.add_argument("cnf")
    gen.add_argument("--r", type=int, default=2, help="stacking level (default 2)")
    gen.add_argument("--binary", action="store_true", help="two-letter encoding")
    gen.add_argument("-o", "--output", default=None, help="output DFA file (default stdout)")
    gen.set_defaults(func=cmd_gen)

    exact = sub.add_parser("exact", help="exact shortest reset word of a DFA file")
    exact.add_argument("dfa")
    _add_budget_flags(exact)
    exact.set_defaults(func=cmd_exact)

    greedy = sub.add_parser("greedy", help="greedy reset word of a DFA file")
    greedy.add_argument("dfa")
    greedy.set_defaults(func=cmd_greedy)

    check = sub.add_parser("check", help="apply a word; exit 0 iff it resets the DFA")
    check.add_argument("dfa")
    check.add_argument("word", help="word over the DFA's alphabet, e.g. cbbac")
    check.set_defaults(func=cmd_check)

    verify = sub.add_parser("verify", help="run every claim check for a CNF instance")
    verify.add_argument("cnf")
    verify.add_argument("--r", type=int, default=2, help="stacking level (default 2)")
    verify.add_argument("--binary", action="store_true",
                        help="also check the two-letter encoding sandwich")
    _add_budget_flags(verify)
    verify.set_defaults(func=cmd_verify)

    bench = sub.add_parser("bench", help="benchmark a directory of CNF files to CSV")
    bench.add_argument("directory")
    bench.add_argument("--csv", required=True, help="output CSV path")
    bench.add_argument("--no-timing", action="store_true",
                       help="write 0 in wall_millis for reproducible output")
    _add_budget_flags(bench)
    bench.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DimacsError, DfaFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
