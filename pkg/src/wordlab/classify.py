"""Word-class predicates: rich, trapezoidal, balanced, finite Sturmian.

Richness comes with two independently implemented routes (palindrome
count vs complete returns), and the trapezoid property with two as well
(index identity |w| = R + K vs the shape of the complexity difference
profile).  The redundancy is the point: the exhaustive verifier pits the
routes against each other.

"Finite Sturmian" is implemented as "binary and balanced", the classical
operational equivalent of being a factor of a Sturmian word.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .complexity import (
    StructuralIndices,
    difference_profile,
    palindromic_complexity,
    structural_indices,
    subword_complexity,
)
from .core import complete_returns, is_palindrome, palindromic_factors
from .palindromes import index_count_palindromes

# Involution used to compare a palindromic-complexity profile with its
# own reversal: 0 and 2 swap, 1 is fixed.
THETA = {0: 2, 1: 1, 2: 0}


def is_rich_by_count(w: str) -> bool:
    """True iff w has the maximum |w| + 1 distinct palindromic factors."""
    return index_count_palindromes(w) == len(w)


def is_rich_by_returns(w: str) -> bool:
    """Richness via returns: every complete return to a palindromic factor
    of w must itself be a palindrome.  Independent of the counting route."""
    for u in palindromic_factors(w):
        if not u:
            continue
        for ret in complete_returns(w, u):
            if ret != ret[::-1]:
                return False
    return True


def is_trapezoidal(w: str) -> bool:
    """True iff |w| = R + K (no-right-special length plus shortest
    unrepeated suffix length); the empty word qualifies (0 = 0 + 0)."""
    idx = structural_indices(w)
    return len(w) == idx.r_index + idx.k_index


def has_trapezoidal_profile(w: str) -> tuple[int, int] | None:
    """The (r, s) run lengths when the complexity difference vector is
    exactly 1^r 0^s (-1)^r; None when it is not of that shape."""
    return difference_profile(w).trapezoid_runs


def _require_at_most_binary(w: str) -> list[str]:
    letters = sorted(set(w))
    if len(letters) > 2:
        raise ValueError("balance defined for binary words")
    return letters


def is_balanced(w: str) -> bool:
    """Balance over at most two symbols: equal-length factors never differ
    by more than 1 in their count of either symbol.

    Raises ValueError when w uses three or more distinct symbols.
    """
    letters = _require_at_most_binary(w)
    if len(letters) < 2:
        return True
    a = letters[0]
    n = len(w)
    for m in range(1, n):
        cnt = w[:m].count(a)
        lo = hi = cnt
        for i in range(n - m):
            cnt += (w[i + m] == a) - (w[i] == a)
            if cnt < lo:
                lo = cnt
            elif cnt > hi:
                hi = cnt
            if hi - lo > 1:
                return False
    return True


def unbalance_witness(w: str) -> str | None:
    """Shortest palindrome U such that xUx and yUy are both factors of w
    for the two distinct symbols x, y; ties broken lexicographically.

    None when w is balanced; such a witness exists exactly when it is not.
    Raises ValueError when w uses three or more distinct symbols.
    """
    letters = _require_at_most_binary(w)
    if len(letters) < 2:
        return None
    n = len(w)
    for m in range(2, n + 1):
        outer_by_core: dict[str, set[str]] = {}
        for i in range(n - m + 1):
            f = w[i : i + m]
            if f[0] == f[-1]:
                u = f[1:-1]
                if u == u[::-1]:
                    outer_by_core.setdefault(u, set()).add(f[0])
        hits = sorted(u for u, outer in outer_by_core.items() if len(outer) == 2)
        if hits:
            return hits[0]
    return None


def is_finite_sturmian(w: str) -> bool:
    """True iff w uses at most two distinct symbols and is balanced.

    Constant words (and the empty word) count as finite Sturmian.
    """
    return len(set(w)) <= 2 and is_balanced(w)


def is_sturmian_palindrome(w: str) -> bool:
    return is_palindrome(w) and is_finite_sturmian(w)


def condition_B_mismatches(w: str) -> list[tuple[int, int, int]]:
    """Indices where P(n) + P(n+1) differs from C(n+1) - C(n) + 2.

    Evaluates every 0 <= n <= |w| (using C(|w|+1) = P(|w|+1) = 0) and
    returns (n, lhs, rhs) triples in ascending n, so diagnostics can
    point at the first failure.
    """
    c = subword_complexity(w)
    p = palindromic_complexity(w)
    out = []
    for n in range(len(w) + 1):
        lhs = p[n] + p[n + 1]
        rhs = c[n + 1] - c[n] + 2
        if lhs != rhs:
            out.append((n, lhs, rhs))
    return out


def condition_B(w: str) -> bool:
    """Pointwise coupling of palindromic and subword complexity:
    P(n) + P(n+1) = C(n+1) - C(n) + 2 for every 0 <= n <= |w|.

    Holds exactly for the words that are rich palindromes.
    """
    return not condition_B_mismatches(w)


def condition_B_prime_mismatches(w: str) -> list[tuple[int, int]]:
    """Indices where P(n) + P(N-n) != 2, ascending (N = |w|)."""
    n = len(w)
    p = palindromic_complexity(w)
    return [(i, p[i] + p[n - i]) for i in range(n + 1) if p[i] + p[n - i] != 2]


def condition_B_prime(w: str) -> bool:
    """Symmetry of the palindromic complexity: P(n) + P(N-n) = 2 for all n.

    Holds exactly for the Sturmian palindromes.
    """
    return not condition_B_prime_mismatches(w)


def theta_palindrome_check(values: Sequence[int]) -> bool:
    """True iff the integer sequence equals the image of its reversal under
    the 0<->2, 1->1 involution.

    Intended for palindromic-complexity profiles truncated to P(0)..P(N);
    raises ValueError if any entry falls outside {0, 1, 2}.
    """
    if any(v not in (0, 1, 2) for v in values):
        raise ValueError("profile not over {0,1,2}")
    return list(values) == [THETA[v] for v in reversed(values)]


@dataclass(frozen=True)
class ClassificationReport:
    """Every per-word verdict and index in one immutable record.

    is_balanced and unbalance_witness are None for words using three or
    more distinct symbols, where balance is undefined.  palindrome_count
    includes the empty word, so is_rich means palindrome_count == |w|+1.
    """

    word: str
    is_palindrome: bool
    is_rich: bool
    is_trapezoidal: bool
    is_balanced: bool | None
    is_finite_sturmian: bool
    is_sturmian_palindrome: bool
    condition_B: bool
    condition_B_prime: bool
    indices: StructuralIndices
    palindrome_count: int
    unbalance_witness: str | None


def classify(w: str) -> ClassificationReport:
    """Compute the full classification of one word."""
    idx = structural_indices(w)
    pal = is_palindrome(w)
    rich = is_rich_by_count(w)
    trapezoidal = len(w) == idx.r_index + idx.k_index
    if len(set(w)) <= 2:
        balanced: bool | None = is_balanced(w)
        witness = unbalance_witness(w)
        sturmian = bool(balanced)
    else:
        balanced = None
        witness = None
        sturmian = False
    return ClassificationReport(
        word=w,
        is_palindrome=pal,
        is_rich=rich,
        is_trapezoidal=trapezoidal,
        is_balanced=balanced,
        is_finite_sturmian=sturmian,
        is_sturmian_palindrome=pal and sturmian,
        condition_B=condition_B(w),
        condition_B_prime=condition_B_prime(w),
        indices=idx,
        palindrome_count=index_count_palindromes(w) + 1,
        unbalance_witness=witness,
    )
