"""Exhaustive verification of word-class identities at desk scale.

Each claim is a per-word predicate evaluated over every word up to a
length bound; violations are collected with a pointwise diagnostic.  The
word space is partitioned into fixed prefix blocks, so parallel and
sequential runs visit the same blocks in the same canonical order and
produce identical reports.
"""

from __future__ import annotations

import itertools
import time
from collections.abc import Callable
from dataclasses import dataclass
from multiprocessing import Pool

from .classify import (
    condition_B_mismatches,
    condition_B_prime,
    has_trapezoidal_profile,
    is_balanced,
    is_finite_sturmian,
    is_palindrome,
    is_rich_by_count,
    is_rich_by_returns,
    is_sturmian_palindrome,
    is_trapezoidal,
)
from .complexity import minimal_period, r_index
from .core import Alphabet, as_alphabet, palindromic_factors

DEFAULT_BUDGET = 1 << 26  # refuse enumerations beyond ~67M words
_BLOCK_CAP = 2048  # max words enumerated per work block


class BudgetExceededError(RuntimeError):
    """Raised when an enumeration would exceed the configured word budget."""


def word_count(alphabet_size: int, max_len: int) -> int:
    """Number of words of length 0..max_len over an alphabet of that size."""
    return sum(alphabet_size**n for n in range(max_len + 1))


# ---------------------------------------------------------------------------
# Claim checkers: return None when the word conforms, a diagnostic otherwise.
# ---------------------------------------------------------------------------


def _check_prop1(w: str) -> str | None:
    by_count = is_rich_by_count(w)
    by_returns = is_rich_by_returns(w)
    if by_count != by_returns:
        return f"rich by count={by_count}, rich by returns={by_returns}"
    return None


def _check_prop2(w: str) -> str | None:
    if is_trapezoidal(w) and not is_rich_by_count(w):
        return "trapezoidal but not rich"
    return None


def _check_thm_fgc(w: str) -> str | None:
    rich_palindrome = is_palindrome(w) and is_rich_by_count(w)
    mismatches = condition_B_mismatches(w)
    if rich_palindrome and mismatches:
        n, lhs, rhs = mismatches[0]
        return f"rich palindrome but P(n)+P(n+1) != C(n+1)-C(n)+2 at n={n}: {lhs} != {rhs}"
    if not rich_palindrome and not mismatches:
        return "complexity coupling holds but not a rich palindrome"
    return None


def _check_thm_main(w: str) -> str | None:
    sturmian_pal = is_sturmian_palindrome(w)
    symmetric = condition_B_prime(w)
    trapezoidal_pal = is_palindrome(w) and is_trapezoidal(w)
    if not (sturmian_pal == symmetric == trapezoidal_pal):
        return (
            f"sturmian palindrome={sturmian_pal}, symmetric P-profile={symmetric}, "
            f"trapezoidal palindrome={trapezoidal_pal}"
        )
    return None


def _check_pal_bound(w: str) -> str | None:
    count = len(palindromic_factors(w))
    if count > len(w) + 1:
        return f"{count} distinct palindromic factors, bound is {len(w) + 1}"
    return None


def _check_period_ineq(w: str) -> str | None:
    if not w:
        return None
    period = minimal_period(w)
    bound = r_index(w) + 1
    if period < bound:
        return f"minimal period {period} < R+1 = {bound}"
    return None


def _check_binary_trap(w: str) -> str | None:
    symbols = len(set(w))
    if symbols >= 3 and is_trapezoidal(w):
        return f"trapezoidal word over {symbols} distinct symbols"
    return None


def _check_profile_equiv(w: str) -> str | None:
    if not w:
        return None  # difference profile undefined for the empty word
    by_indices = is_trapezoidal(w)
    runs = has_trapezoidal_profile(w)
    if by_indices != (runs is not None):
        return f"index trapezoidal={by_indices}, difference-profile runs={runs}"
    return None


@dataclass(frozen=True)
class ClaimSpec:
    description: str
    checker: Callable[[str], str | None]


CLAIMS: dict[str, ClaimSpec] = {
    "PROP1": ClaimSpec(
        "richness by palindrome count agrees with richness by complete returns",
        _check_prop1,
    ),
    "PROP2": ClaimSpec("every trapezoidal word is rich", _check_prop2),
    "THM_FGC": ClaimSpec(
        "rich palindromes are exactly the words with P(n)+P(n+1) = C(n+1)-C(n)+2 for all n",
        _check_thm_fgc,
    ),
    "THM_MAIN": ClaimSpec(
        "Sturmian palindrome == symmetric palindromic complexity == trapezoidal palindrome",
        _check_thm_main,
    ),
    "PAL_BOUND": ClaimSpec(
        "no word has more than |w|+1 distinct palindromic factors", _check_pal_bound
    ),
    "PERIOD_INEQ": ClaimSpec(
        "the minimal period is at least R+1 for every nonempty word", _check_period_ineq
    ),
    "BINARY_TRAP": ClaimSpec(
        "no trapezoidal word uses three or more distinct symbols", _check_binary_trap
    ),
    "PROFILE_EQUIV": ClaimSpec(
        "|w| = R+K agrees with the 1^r 0^s (-1)^r difference-profile shape",
        _check_profile_equiv,
    ),
}


@dataclass
class VerificationReport:
    """Outcome of one exhaustive claim check.

    counterexamples come in canonical (length, lexicographic) order.
    elapsed_seconds is excluded from the JSON form so that reruns (and
    parallel vs sequential runs) serialize byte-identically.
    """

    claim: str
    alphabet: str
    max_len: int
    words_checked: int
    counterexamples: list[tuple[str, str]]
    elapsed_seconds: float

    @property
    def verified(self) -> bool:
        return not self.counterexamples

    def to_json_dict(self) -> dict:
        return {
            "schema_version": 1,
            "claim": self.claim,
            "description": CLAIMS[self.claim].description,
            "alphabet": self.alphabet,
            "max_len": self.max_len,
            "words_checked": self.words_checked,
            "verified": self.verified,
            "counterexamples": [
                {"word": w, "diagnostic": d} for w, d in self.counterexamples
            ],
        }


def _split_head(alphabet_size: int, n: int) -> int:
    """Prefix length that keeps each enumeration block at or under _BLOCK_CAP."""
    head = 0
    while alphabet_size ** (n - head) > _BLOCK_CAP:
        head += 1
    return head


def _blocks(alphabet: Alphabet, max_len: int):
    """Fixed (length, prefix) partition of the word space, canonical order.

    The partition depends only on the alphabet and bound, never on the
    worker count, which is what makes parallel runs deterministic.
    """
    for n in range(max_len + 1):
        head = _split_head(len(alphabet), n)
        if head == 0:
            yield (n, "")
        else:
            for prefix in itertools.product(alphabet.symbols, repeat=head):
                yield (n, "".join(prefix))


def _run_block(task: tuple[str, str, int, str]) -> tuple[int, list[tuple[str, str]]]:
    claim, symbols, n, prefix = task
    checker = CLAIMS[claim].checker
    checked = 0
    bad: list[tuple[str, str]] = []
    for tail in itertools.product(symbols, repeat=n - len(prefix)):
        w = prefix + "".join(tail)
        checked += 1
        diag = checker(w)
        if diag is not None:
            bad.append((w, diag))
    return checked, bad


def verify_claim(
    claim: str,
    alphabet: Alphabet | str,
    max_len: int,
    workers: int | None = None,
    budget: int = DEFAULT_BUDGET,
) -> VerificationReport:
    """Evaluate a named claim on every word of length 0..max_len.

    workers=None or 1 runs sequentially; higher values fan blocks out to
    a process pool.  Either way the report is identical.  Raises
    BudgetExceededError before enumerating more than `budget` words.
    """
    if claim not in CLAIMS:
        raise ValueError(f"unknown claim {claim!r}; known: {', '.join(CLAIMS)}")
    alpha = as_alphabet(alphabet)
    if max_len < 0:
        raise ValueError("max_len must be non-negative")
    total = word_count(len(alpha), max_len)
    if total > budget:
        raise BudgetExceededError(
            f"{total} words of length <= {max_len} over {len(alpha)} symbols "
            f"exceeds the budget of {budget}"
        )
    started = time.perf_counter()
    tasks = [(claim, alpha.as_string, n, prefix) for n, prefix in _blocks(alpha, max_len)]
    if workers is not None and workers > 1:
        with Pool(processes=workers) as pool:
            results = pool.map(_run_block, tasks)
    else:
        results = [_run_block(t) for t in tasks]
    checked = sum(c for c, _ in results)
    counterexamples = [hit for _, bad in results for hit in bad]
    return VerificationReport(
        claim=claim,
        alphabet=alpha.as_string,
        max_len=max_len,
        words_checked=checked,
        counterexamples=counterexamples,
        elapsed_seconds=time.perf_counter() - started,
    )


# ---------------------------------------------------------------------------
# Class-membership predicates for enumeration and censuses.
# ---------------------------------------------------------------------------


def _balanced_or_wide(w: str) -> bool:
    """Balanced, with words over 3+ symbols counted as unbalanced rather
    than rejected (enumeration sweeps mixed alphabets)."""
    return len(set(w)) <= 2 and is_balanced(w)


def _rich_not_trapezoidal(w: str) -> bool:
    return is_rich_by_count(w) and not is_trapezoidal(w)


def _trapezoidal_not_sturmian(w: str) -> bool:
    return is_trapezoidal(w) and not is_finite_sturmian(w)


def _condition_B_pred(w: str) -> bool:
    return not condition_B_mismatches(w)


PREDICATES: dict[str, Callable[[str], bool]] = {
    "palindrome": is_palindrome,
    "rich": is_rich_by_count,
    "trapezoidal": is_trapezoidal,
    "balanced": _balanced_or_wide,
    "finite_sturmian": is_finite_sturmian,
    "sturmian_palindrome": is_sturmian_palindrome,
    "condition_B": _condition_B_pred,
    "condition_B_prime": condition_B_prime,
    "rich_not_trapezoidal": _rich_not_trapezoidal,
    "trapezoidal_not_sturmian": _trapezoidal_not_sturmian,
}


def find_class_members(
    predicate: str,
    alphabet: Alphabet | str,
    length: int,
    budget: int = DEFAULT_BUDGET,
) -> list[str]:
    """All words of exactly the given length satisfying a named predicate,
    in lexicographic order."""
    if predicate not in PREDICATES:
        raise ValueError(f"unknown predicate {predicate!r}; known: {', '.join(PREDICATES)}")
    alpha = as_alphabet(alphabet)
    if length < 0:
        raise ValueError("length must be non-negative")
    if len(alpha) ** length > budget:
        raise BudgetExceededError(
            f"{len(alpha) ** length} words of length {length} exceeds the budget of {budget}"
        )
    check = PREDICATES[predicate]
    return [
        w
        for tail in itertools.product(alpha.symbols, repeat=length)
        if check(w := "".join(tail))
    ]


CENSUS_CLASSES = (
    "rich",
    "trapezoidal",
    "balanced",
    "sturmian_palindrome",
    "condition_B",
    "condition_B_prime",
)


@dataclass
class CensusTable:
    """Per-length counts of the main word classes, lengths 1..max_len."""

    alphabet: str
    max_len: int
    lengths: list[int]
    total: list[int]
    counts: dict[str, list[int]]

    def to_json_dict(self) -> dict:
        out: dict = {
            "schema_version": 1,
            "alphabet": self.alphabet,
            "max_len": self.max_len,
            "lengths": self.lengths,
            "total": self.total,
        }
        for name in CENSUS_CLASSES:
            out[name] = self.counts[name]
        return out

    def rows(self) -> list[list[int]]:
        """One row per length: [length, total, then one column per class]."""
        return [
            [self.lengths[i], self.total[i]]
            + [self.counts[name][i] for name in CENSUS_CLASSES]
            for i in range(len(self.lengths))
        ]


def census(
    alphabet: Alphabet | str, max_len: int, budget: int = DEFAULT_BUDGET
) -> CensusTable:
    """Count class members per length by full enumeration."""
    alpha = as_alphabet(alphabet)
    if max_len < 0:
        raise ValueError("max_len must be non-negative")
    total_words = word_count(len(alpha), max_len)
    if total_words > budget:
        raise BudgetExceededError(
            f"{total_words} words of length <= {max_len} exceeds the budget of {budget}"
        )
    lengths = list(range(1, max_len + 1))
    totals: list[int] = []
    counts: dict[str, list[int]] = {name: [] for name in CENSUS_CLASSES}
    for n in lengths:
        per_class = {name: 0 for name in CENSUS_CLASSES}
        total = 0
        for tail in itertools.product(alpha.symbols, repeat=n):
            w = "".join(tail)
            total += 1
            for name in CENSUS_CLASSES:
                if PREDICATES[name](w):
                    per_class[name] += 1
        totals.append(total)
        for name in CENSUS_CLASSES:
            counts[name].append(per_class[name])
    return CensusTable(
        alphabet=alpha.as_string,
        max_len=max_len,
        lengths=lengths,
        total=totals,
        counts=counts,
    )
