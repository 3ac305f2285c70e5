"""Command-line front end.

Subcommands: analyze one word, verify a claim exhaustively, enumerate
class members at one length, tabulate a census, or emit a Sturmian
corpus.  Exit codes: 0 success/verified, 1 counterexamples found,
2 usage error, 3 word-budget refusal.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from .classify import classify
from .complexity import difference_profile, palindromic_complexity, subword_complexity
from .core import MAX_ALPHABET_SIZE, palindromic_factors
from .generate import sturmian_corpus
from .theorems import (
    CLAIMS,
    DEFAULT_BUDGET,
    PREDICATES,
    BudgetExceededError,
    CensusTable,
    VerificationReport,
    census,
    find_class_members,
    verify_claim,
)

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload))


def _csv_writer():
    return csv.writer(sys.stdout, lineterminator="\n")


# ---------------------------------------------------------------------------
# analyze
# ---------------------------------------------------------------------------


def analyze_payload(word: str) -> dict:
    """Flat JSON-ready record with profiles, indices, factors, and verdicts."""
    if not (word.isascii() and (word == "" or word.isprintable())):
        raise ValueError("word must consist of printable ASCII symbols")
    alphabet = "".join(sorted(set(word)))
    if len(alphabet) > MAX_ALPHABET_SIZE:
        raise ValueError(f"word uses more than {MAX_ALPHABET_SIZE} distinct symbols")
    report = classify(word)
    c = subword_complexity(word)
    p = palindromic_complexity(word)
    if word:
        d = difference_profile(word)
        d_values: list[int] | None = list(d.values)
        runs = list(d.trapezoid_runs) if d.trapezoid_runs is not None else None
    else:
        d_values = None
        runs = None
    factors = sorted(palindromic_factors(word), key=lambda f: (len(f), f))
    return {
        "schema_version": SCHEMA_VERSION,
        "word": word,
        "length": len(word),
        "alphabet": alphabet,
        "C": c,
        "P": p,
        "D": d_values,
        "trapezoid_runs": runs,
        "R": report.indices.r_index,
        "K": report.indices.k_index,
        "pi": report.indices.min_period,
        "palindrome_count": report.palindrome_count,
        "palindromic_factors": factors,
        "palindrome": report.is_palindrome,
        "rich": report.is_rich,
        "trapezoidal": report.is_trapezoidal,
        "balanced": report.is_balanced,
        "finite_sturmian": report.is_finite_sturmian,
        "sturmian_palindrome": report.is_sturmian_palindrome,
        "condition_B": report.condition_B,
        "condition_B_prime": report.condition_B_prime,
        "unbalance_witness": report.unbalance_witness,
    }


def _fmt_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        return " ".join(str(v) for v in value)
    return str(value)


def _quote(w: str) -> str:
    return f"'{w}'"


def _analyze_text(payload: dict) -> None:
    q = _quote
    print(f"word: {q(payload['word'])}  length: {payload['length']}  alphabet: {q(payload['alphabet'])}")
    print(f"C:  {_fmt_cell(payload['C'])}")
    print(f"P:  {_fmt_cell(payload['P'])}")
    if payload["D"] is not None:
        runs = payload["trapezoid_runs"]
        suffix = f"   (runs r={runs[0]} s={runs[1]})" if runs else ""
        print(f"D:  {_fmt_cell(payload['D'])}{suffix}")
    print(f"R: {payload['R']}  K: {payload['K']}  pi: {_fmt_cell(payload['pi']) or 'undefined'}")
    print(
        f"palindromic factors ({payload['palindrome_count']}): "
        + ", ".join(q(f) for f in payload["palindromic_factors"])
    )
    for key in (
        "palindrome",
        "rich",
        "trapezoidal",
        "balanced",
        "finite_sturmian",
        "sturmian_palindrome",
        "condition_B",
        "condition_B_prime",
    ):
        value = payload[key]
        print(f"{key}: {'undefined' if value is None else _fmt_cell(value)}")
    if payload["unbalance_witness"] is not None:
        print(f"unbalance_witness: {q(payload['unbalance_witness'])}")


def _cmd_analyze(args) -> int:
    payload = analyze_payload(args.word)
    if args.format == "json":
        _emit_json(payload)
    elif args.format == "csv":
        writer = _csv_writer()
        writer.writerow(["field", "value"])
        for key, value in payload.items():
            writer.writerow([key, _fmt_cell(value)])
    else:
        _analyze_text(payload)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def _verify_text(report: VerificationReport) -> None:
    print(f"claim {report.claim}: {CLAIMS[report.claim].description}")
    print(f"alphabet: '{report.alphabet}'  lengths: 0..{report.max_len}")
    print(f"words checked: {report.words_checked}")
    print(f"counterexamples: {len(report.counterexamples)}")
    for word, diag in report.counterexamples:
        print(f"  '{word}': {diag}")
    print(f"verified: {'yes' if report.verified else 'no'}")
    print(f"elapsed: {report.elapsed_seconds:.3f}s")


def _cmd_verify(args) -> int:
    if args.sequential:
        workers = 1
    elif args.parallel is not None:
        workers = args.parallel
    else:
        workers = os.cpu_count() or 1
    report = verify_claim(
        args.claim, args.alphabet, args.max_len, workers=workers, budget=args.budget
    )
    if args.format == "json":
        _emit_json(report.to_json_dict())
    elif args.format == "csv":
        writer = _csv_writer()
        writer.writerow(["word", "diagnostic"])
        for word, diag in report.counterexamples:
            writer.writerow([word, diag])
    else:
        _verify_text(report)
    return EXIT_OK if report.verified else EXIT_COUNTEREXAMPLE


# ---------------------------------------------------------------------------
# enumerate
# ---------------------------------------------------------------------------


def _cmd_enumerate(args) -> int:
    words = find_class_members(args.predicate, args.alphabet, args.len, budget=args.budget)
    if args.format == "json":
        _emit_json(
            {
                "schema_version": SCHEMA_VERSION,
                "predicate": args.predicate,
                "alphabet": args.alphabet,
                "length": args.len,
                "count": len(words),
                "words": words,
            }
        )
    elif args.format == "csv":
        writer = _csv_writer()
        writer.writerow(["word"])
        for w in words:
            writer.writerow([w])
    else:
        for w in words:
            print(w)
    return EXIT_OK


# ---------------------------------------------------------------------------
# census
# ---------------------------------------------------------------------------

_CENSUS_HEADER = [
    "length",
    "total",
    "rich",
    "trapezoidal",
    "balanced",
    "sturmian_palindrome",
    "condition_B",
    "condition_B_prime",
]


def _census_rows(table: CensusTable) -> list[list[int]]:
    return table.rows()


def _cmd_census(args) -> int:
    table = census(args.alphabet, args.max_len, budget=args.budget)
    if args.format == "json":
        _emit_json(table.to_json_dict())
    elif args.format == "csv":
        writer = _csv_writer()
        writer.writerow(_CENSUS_HEADER)
        for row in _census_rows(table):
            writer.writerow(row)
    else:
        widths = [max(len(h), 6) for h in _CENSUS_HEADER]
        print("  ".join(h.rjust(w) for h, w in zip(_CENSUS_HEADER, widths)))
        for row in _census_rows(table):
            print("  ".join(str(v).rjust(w) for v, w in zip(row, widths)))
    return EXIT_OK


# ---------------------------------------------------------------------------
# corpus
# ---------------------------------------------------------------------------


def _cmd_corpus(args) -> int:
    words = sorted(
        sturmian_corpus(args.max_denominator, args.max_factor_len),
        key=lambda w: (len(w), w),
    )
    if args.format == "json":
        _emit_json(
            {
                "schema_version": SCHEMA_VERSION,
                "max_denominator": args.max_denominator,
                "max_factor_len": args.max_factor_len,
                "count": len(words),
                "words": words,
            }
        )
    elif args.format == "csv":
        writer = _csv_writer()
        writer.writerow(["word"])
        for w in words:
            writer.writerow([w])
    else:
        for w in words:
            print(w)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wordlab",
        description="Complexity profiles, palindromic richness, and exhaustive "
        "verification for finite words.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("json", "csv", "text"), default="text", help="output format"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser(
        "analyze", parents=[common], help="profiles and verdicts for one word"
    )
    p_analyze.add_argument("word", help="ASCII word; the empty string is the empty word")
    p_analyze.set_defaults(func=_cmd_analyze)

    p_verify = sub.add_parser(
        "verify",
        parents=[common],
        help="check a claim on every word up to a length bound",
        epilog="claims: " + ", ".join(CLAIMS),
    )
    p_verify.add_argument("claim", help="claim identifier, e.g. THM_MAIN")
    p_verify.add_argument("--alphabet", required=True, help="alphabet symbols, e.g. ab")
    p_verify.add_argument("--max-len", type=int, required=True)
    group = p_verify.add_mutually_exclusive_group()
    group.add_argument("--parallel", type=int, metavar="K", help="worker processes")
    group.add_argument(
        "--sequential", action="store_true", help="force single-threaded execution"
    )
    p_verify.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p_verify.set_defaults(func=_cmd_verify)

    p_enum = sub.add_parser(
        "enumerate",
        parents=[common],
        help="list all words of one length in a class",
        epilog="predicates: " + ", ".join(PREDICATES),
    )
    p_enum.add_argument("predicate", help="predicate identifier, e.g. rich")
    p_enum.add_argument("--alphabet", required=True)
    p_enum.add_argument("--len", type=int, required=True)
    p_enum.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p_enum.set_defaults(func=_cmd_enumerate)

    p_census = sub.add_parser(
        "census", parents=[common], help="per-length class counts"
    )
    p_census.add_argument("--alphabet", required=True)
    p_census.add_argument("--max-len", type=int, required=True)
    p_census.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p_census.set_defaults(func=_cmd_census)

    p_corpus = sub.add_parser(
        "corpus", parents=[common], help="factors of Christoffel words"
    )
    p_corpus.add_argument("--max-denominator", type=int, required=True)
    p_corpus.add_argument("--max-factor-len", type=int, required=True)
    p_corpus.set_defaults(func=_cmd_corpus)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
