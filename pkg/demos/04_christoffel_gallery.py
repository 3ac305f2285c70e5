"""Christoffel words and their central palindromes.

Builds the lower Christoffel word for every coprime slope with p+q up to
a bound, peels off the first and last letter to get the central word,
and checks the three equivalent faces of the Sturmian-palindrome class
on each: balanced palindrome, symmetric palindromic complexity, and
trapezoidal palindrome.  Also exercises the corpus generator, whose
members are factors of Christoffel words and therefore all Sturmian.

Run:  python3 demos/04_christoffel_gallery.py
"""

import math

from wordlab import (
    central_word,
    classify,
    condition_B_prime,
    is_sturmian_palindrome,
    is_trapezoidal,
    lower_christoffel,
    sturmian_corpus,
)

MAX_DENOMINATOR = 12


def main() -> None:
    print(f"{'p/q':>6}  {'christoffel':<14} {'central':<12} A'  B'  C'")
    for total in range(2, MAX_DENOMINATOR + 1):
        for p in range(1, total):
            q = total - p
            if math.gcd(p, q) != 1:
                continue
            w = lower_christoffel(p, q)
            c = central_word(p, q)
            a_face = is_sturmian_palindrome(c)
            b_face = condition_B_prime(c)
            c_face = classify(c).is_palindrome and is_trapezoidal(c)
            marks = "  ".join("y" if face else "N" for face in (a_face, b_face, c_face))
            print(f"{p:>3}/{q:<3} {w:<14} {c:<12} {marks}")
        if total >= 6:
            break  # the table gets long; the corpus check below covers the rest

    corpus = sturmian_corpus(MAX_DENOMINATOR, 8)
    verdicts = [classify(w) for w in sorted(corpus, key=lambda w: (len(w), w))]
    all_sturmian = all(rep.is_finite_sturmian for rep in verdicts)
    all_rich = all(rep.is_rich for rep in verdicts)
    all_trap = all(rep.is_trapezoidal for rep in verdicts)
    print()
    print(
        f"corpus(max_denominator={MAX_DENOMINATOR}, max_factor_len=8): "
        f"{len(corpus)} distinct factors"
    )
    print(f"  every member finite Sturmian: {all_sturmian}")
    print(f"  every member rich:            {all_rich}")
    print(f"  every member trapezoidal:     {all_trap}")
    by_length: dict[int, int] = {}
    for w in corpus:
        by_length[len(w)] = by_length.get(len(w), 0) + 1
    print(f"  members per length: {dict(sorted(by_length.items()))}")


if __name__ == "__main__":
    main()
