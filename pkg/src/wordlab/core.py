"""Basic operations on finite words.

A word is a plain Python string over a small alphabet of printable ASCII
symbols; the empty string is the empty word.  Everything here is a pure
function of its inputs.  The set-based routines are deliberately naive:
they serve as the reference oracles that the accelerated palindrome
index is tested against.
"""

from __future__ import annotations

from collections.abc import Iterable

MAX_ALPHABET_SIZE = 26


class Alphabet:
    """Ordered collection of distinct printable ASCII symbols.

    The given order fixes lexicographic order wherever words are
    enumerated or reported, so ``Alphabet("ba")`` puts b before a.
    """

    __slots__ = ("symbols",)

    def __init__(self, symbols: Iterable[str]) -> None:
        syms = tuple(symbols)
        if not 1 <= len(syms) <= MAX_ALPHABET_SIZE:
            raise ValueError(
                f"alphabet must have 1..{MAX_ALPHABET_SIZE} symbols, got {len(syms)}"
            )
        seen: set[str] = set()
        for s in syms:
            if len(s) != 1 or not (s.isascii() and s.isprintable()):
                raise ValueError(f"not a printable ASCII symbol: {s!r}")
            if s in seen:
                raise ValueError(f"duplicate symbol: {s!r}")
            seen.add(s)
        self.symbols = syms

    @property
    def as_string(self) -> str:
        return "".join(self.symbols)

    def validate_word(self, w: str) -> str:
        """Return w unchanged, or raise if it uses symbols outside the alphabet."""
        for ch in w:
            if ch not in self.symbols:
                raise ValueError(f"symbol {ch!r} not in alphabet {self.as_string!r}")
        return w

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __contains__(self, item: object) -> bool:
        return item in self.symbols

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Alphabet) and self.symbols == other.symbols

    def __hash__(self) -> int:
        return hash(self.symbols)

    def __repr__(self) -> str:
        return f"Alphabet({self.as_string!r})"


def as_alphabet(alphabet: Alphabet | str) -> Alphabet:
    """Coerce a symbol string like "ab" into an Alphabet."""
    return alphabet if isinstance(alphabet, Alphabet) else Alphabet(alphabet)


def is_palindrome(w: str) -> bool:
    """True iff w reads the same backwards; the empty word qualifies."""
    return w == w[::-1]


def occurrences(w: str, u: str) -> list[int]:
    """All start positions of u inside w, ascending, overlaps included."""
    if not u:
        raise ValueError("empty pattern")
    out: list[int] = []
    i = w.find(u)
    while i != -1:
        out.append(i)
        i = w.find(u, i + 1)
    return out


def complete_returns(w: str, u: str) -> set[str]:
    """Factors of w that start and end with u and contain u exactly twice.

    One return per pair of consecutive occurrences of u; occurrences may
    overlap, so the two copies of u inside a return may share positions
    (complete_returns("aaa", "aa") == {"aaa"}).
    """
    occ = occurrences(w, u)
    return {w[i : j + len(u)] for i, j in zip(occ, occ[1:])}


def palindromic_factors(w: str) -> set[str]:
    """The distinct palindromic factors of w, the empty word included.

    Naive enumerate-and-filter over all factors; this is the reference
    oracle for PalindromeIndex.  A word of length N never has more than
    N + 1 distinct palindromic factors.
    """
    out = {""}
    n = len(w)
    for i in range(n):
        for j in range(i + 1, n + 1):
            f = w[i:j]
            if f == f[::-1]:
                out.add(f)
    return out


def longest_border(w: str) -> str:
    """Longest word that is both a proper prefix and a proper suffix of w.

    Returns the empty word when |w| <= 1 or no nonempty border exists.
    """
    n = len(w)
    for k in range(n - 1, 0, -1):
        if w[:k] == w[n - k :]:
            return w[:k]
    return ""
