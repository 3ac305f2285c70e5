"""Exhaustive sweep over every bundled claim.

Each claim is an identity between independently implemented predicates
(palindrome counting vs complete returns, index arithmetic vs profile
shape, balance vs complexity symmetry).  This script brute-forces all of
them over every binary word up to length 12 and every ternary word up to
length 7, printing the word counts and any counterexamples: the expected
output is zero counterexamples on every line.

Run:  python3 demos/02_theorem_sweep.py
"""

from wordlab import CLAIMS, verify_claim

BOUNDS = {"ab": 12, "abc": 7}


def main() -> None:
    for alphabet, max_len in BOUNDS.items():
        print(f"alphabet {alphabet!r}, lengths 0..{max_len}")
        for claim in CLAIMS:
            report = verify_claim(claim, alphabet, max_len)
            status = "ok" if report.verified else f"{len(report.counterexamples)} FAILURES"
            print(
                f"  {claim:<14} {report.words_checked:>6} words  "
                f"{report.elapsed_seconds:6.2f}s  {status}"
            )
            for word, diagnostic in report.counterexamples[:3]:
                print(f"      {word!r}: {diagnostic}")
        print()
    print("claim key:")
    for claim, info in CLAIMS.items():
        print(f"  {claim:<14} {info.description}")


if __name__ == "__main__":
    main()
