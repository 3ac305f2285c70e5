"""Anatomy of a complexity profile.

Walks through the per-length factor counts of a handful of showcase
words and shows how the trapezoid shape emerges: the subword complexity
C(n) of a "nice" word climbs by 1, flattens, then descends by 1, and the
difference vector D(n) = C(n+1) - C(n) is exactly r ones, s zeros, and
r minus-ones.  Words that fail the shape fail the |w| = R + K identity
too, and vice versa.

Run:  python3 demos/01_profile_anatomy.py
"""

from wordlab import (
    classify,
    difference_profile,
    palindromic_complexity,
    subword_complexity,
)

SHOWCASE = [
    "aaabab",  # trapezoidal but not balanced, so not Sturmian
    "aabbaa",  # rich palindrome that is not trapezoidal
    "aababaa",  # a central word: Sturmian palindrome
    "abaab",  # balanced, factor of the Fibonacci word
    "aaaa",  # constant words are the degenerate trapezoids
]


def bar(n: int) -> str:
    return "#" * n


def show(word: str) -> None:
    rep = classify(word)
    c = subword_complexity(word)
    p = palindromic_complexity(word)
    print(f"word {word!r}  (length {len(word)})")
    print(f"  C profile: {c}")
    for n, value in enumerate(c[:-1]):
        print(f"    C({n}) {bar(value):<8} {value}")
    print(f"  P profile: {p}")
    d = difference_profile(word)
    runs = d.trapezoid_runs
    shape = f"1^{runs[0]} 0^{runs[1]} (-1)^{runs[0]}" if runs else "not a trapezoid"
    print(f"  D = {list(d.values)}   shape: {shape}")
    print(
        f"  R = {rep.indices.r_index}, K = {rep.indices.k_index}, "
        f"R + K = {rep.indices.r_index + rep.indices.k_index} vs |w| = {len(word)}"
    )
    verdicts = [
        name
        for name, value in [
            ("palindrome", rep.is_palindrome),
            ("rich", rep.is_rich),
            ("trapezoidal", rep.is_trapezoidal),
            ("balanced", rep.is_balanced),
            ("finite Sturmian", rep.is_finite_sturmian),
            ("Sturmian palindrome", rep.is_sturmian_palindrome),
        ]
        if value
    ]
    print(f"  verdicts: {', '.join(verdicts) if verdicts else 'none'}")
    if rep.unbalance_witness is not None:
        u = rep.unbalance_witness
        print(f"  unbalance witness: U = {u!r} (both a{u}a and b{u}b occur)")
    print()


def main() -> None:
    for word in SHOWCASE:
        show(word)


if __name__ == "__main__":
    main()
