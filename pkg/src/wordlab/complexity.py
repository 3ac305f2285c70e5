"""Complexity profiles and structural indices of finite words.

Profiles are plain integer lists indexed by factor length n = 0..N+1 for
a word of length N.  The trailing entry at N+1 is always 0; the coupling
identities between subword and palindromic complexity rely on that
convention, so callers should not truncate it away.
"""

from __future__ import annotations

from dataclasses import dataclass


def subword_complexity(w: str) -> list[int]:
    """C[n] = number of distinct factors of w of length n, for n = 0..N+1."""
    n = len(w)
    values = [0] * (n + 2)
    values[0] = 1
    for m in range(1, n + 1):
        values[m] = len({w[i : i + m] for i in range(n - m + 1)})
    return values


def palindromic_complexity(w: str) -> list[int]:
    """P[n] = number of distinct palindromic factors of length n, n = 0..N+1.

    P[0] = 1 (the empty word); the entries sum to the total number of
    distinct palindromic factors.
    """
    n = len(w)
    values = [0] * (n + 2)
    values[0] = 1
    for m in range(1, n + 1):
        seen: set[str] = set()
        for i in range(n - m + 1):
            f = w[i : i + m]
            if f == f[::-1]:
                seen.add(f)
        values[m] = len(seen)
    return values


@dataclass(frozen=True)
class DifferenceProfile:
    """First difference of the subword complexity, values[n] = C(n+1) - C(n).

    trapezoid_runs holds (r, s) when the difference vector is exactly
    r ones, then s zeros, then r minus-ones; None otherwise.
    """

    values: tuple[int, ...]
    trapezoid_runs: tuple[int, int] | None


def _run_decomposition(values: tuple[int, ...]) -> tuple[int, int] | None:
    n = len(values)
    r = 0
    while r < n and values[r] == 1:
        r += 1
    s = 0
    while r + s < n and values[r + s] == 0:
        s += 1
    tail = values[r + s :]
    if len(tail) == r and all(v == -1 for v in tail):
        return (r, s)
    return None


def difference_profile(w: str) -> DifferenceProfile:
    """Difference vector of the subword complexity, indexed 0..N-1."""
    if not w:
        raise ValueError("difference profile undefined for the empty word")
    c = subword_complexity(w)
    values = tuple(c[n + 1] - c[n] for n in range(len(w)))
    return DifferenceProfile(values, _run_decomposition(values))


def right_special_factors(w: str, n: int) -> set[str]:
    """Length-n factors of w that extend to the right by two or more symbols."""
    if n > len(w):
        raise ValueError("length exceeds word")
    ext: dict[str, set[str]] = {}
    for i in range(len(w) - n):
        ext.setdefault(w[i : i + n], set()).add(w[i + n])
    return {f for f, succ in ext.items() if len(succ) >= 2}


def _has_right_special(w: str, p: int) -> bool:
    first: dict[str, str] = {}
    for i in range(len(w) - p):
        f = w[i : i + p]
        c = w[i + p]
        if first.setdefault(f, c) != c:
            return True
    return False


def r_index(w: str) -> int:
    """Smallest length p at which w has no right special factor.

    0 for the empty word and for constant words (the empty factor is
    right special exactly when w uses two or more distinct symbols).
    """
    n = len(w)
    for p in range(n + 1):
        if not _has_right_special(w, p):
            return p
    return n  # the full word is never right special


def k_index(w: str) -> int:
    """Length of the shortest suffix occurring exactly once in w; 0 for the empty word.

    Occurrences are counted with overlaps, so the length-k suffix is
    unrepeated iff its first occurrence starts at |w| - k.
    """
    n = len(w)
    for k in range(1, n + 1):
        if w.find(w[n - k :]) == n - k:
            return k
    return 0


def minimal_period(w: str) -> int:
    """Smallest p >= 1 with w[i] == w[i+p] wherever both sides are defined.

    Direct shift-and-compare scan; equals |w| - |longest_border(w)|.
    """
    if not w:
        raise ValueError("period undefined for the empty word")
    n = len(w)
    for p in range(1, n):
        if w[p:] == w[: n - p]:
            return p
    return n


@dataclass(frozen=True)
class StructuralIndices:
    """The three indices driving the trapezoid classification.

    min_period is None only for the empty word, where it is undefined.
    """

    r_index: int
    k_index: int
    min_period: int | None


def structural_indices(w: str) -> StructuralIndices:
    return StructuralIndices(
        r_index=r_index(w),
        k_index=k_index(w),
        min_period=minimal_period(w) if w else None,
    )
