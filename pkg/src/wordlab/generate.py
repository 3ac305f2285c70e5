"""Word sources: exhaustive enumeration, seeded random sampling, and a
Sturmian corpus built from rational-slope Christoffel words.

Christoffel words are computed with exact integer arithmetic (no
floating-point slopes), and every factor of one is a finite Sturmian
word, which is what makes them a safe corpus generator.
"""

from __future__ import annotations

import itertools
import math
import random
from collections.abc import Iterator

from .core import Alphabet, as_alphabet


def all_words(alphabet: Alphabet | str, n: int) -> Iterator[str]:
    """Yield every length-n word once, in the alphabet's lexicographic order."""
    if n < 0:
        raise ValueError("length must be non-negative")
    alpha = as_alphabet(alphabet)
    for tail in itertools.product(alpha.symbols, repeat=n):
        yield "".join(tail)


def words_up_to(alphabet: Alphabet | str, max_len: int) -> Iterator[str]:
    """Yield every word of length 0..max_len, shortest first, lexicographic."""
    for n in range(max_len + 1):
        yield from all_words(alphabet, n)


def lower_christoffel(p: int, q: int) -> str:
    """Lower Christoffel word for the coprime pair (p, q), over {a, b}.

    Discretizes the segment of slope alpha = p/(p+q): position i carries
    'a' when floor((i+1) alpha) == floor(i alpha), else 'b'.  The result
    has length p+q with exactly q letters a and p letters b.
    """
    if p < 1 or q < 1:
        raise ValueError("requires positive parameters")
    if math.gcd(p, q) != 1:
        raise ValueError("requires coprime parameters")
    n = p + q
    return "".join("a" if (i + 1) * p // n == i * p // n else "b" for i in range(n))


def central_word(p: int, q: int) -> str:
    """Interior of the lower Christoffel word: first and last letters removed.

    Central words are the canonical Sturmian palindromes.
    """
    return lower_christoffel(p, q)[1:-1]


def sturmian_corpus(max_denominator: int, max_factor_len: int) -> set[str]:
    """Factors (up to max_factor_len) of every lower Christoffel word with
    p + q <= max_denominator.  Every member is a finite Sturmian word.
    """
    if max_denominator < 1 or max_factor_len < 1:
        raise ValueError("bounds must be positive")
    out: set[str] = set()
    for n in range(2, max_denominator + 1):
        for p in range(1, n):
            q = n - p
            if math.gcd(p, q) != 1:
                continue
            w = lower_christoffel(p, q)
            out.add("")
            for i in range(len(w)):
                for j in range(i + 1, min(i + max_factor_len, len(w)) + 1):
                    out.add(w[i:j])
    return out


def random_words(
    alphabet: Alphabet | str, length: int, count: int, seed: int
) -> list[str]:
    """Uniform random words of one length, deterministic for a fixed seed.

    Uses the stdlib Mersenne Twister; record the seed next to any output
    derived from these words.
    """
    if length < 0 or count < 0:
        raise ValueError("length and count must be non-negative")
    alpha = as_alphabet(alphabet)
    rng = random.Random(seed)
    return ["".join(rng.choices(alpha.symbols, k=length)) for _ in range(count)]
