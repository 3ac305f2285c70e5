import pytest

from wordlab import (
    CLAIMS,
    PREDICATES,
    BudgetExceededError,
    census,
    find_class_members,
    verify_claim,
    word_count,
)


def test_claim_registry_is_complete():
    assert list(CLAIMS) == [
        "PROP1",
        "PROP2",
        "THM_FGC",
        "THM_MAIN",
        "PAL_BOUND",
        "PERIOD_INEQ",
        "BINARY_TRAP",
        "PROFILE_EQUIV",
    ]


def test_verify_counts_all_words():
    report = verify_claim("THM_FGC", "ab", 6)
    assert report.words_checked == 127  # 1 + 2 + 4 + ... + 64
    assert report.counterexamples == []
    assert report.verified


def test_verify_prop2_small():
    report = verify_claim("PROP2", "ab", 6)
    assert report.counterexamples == []


def test_verify_unary_alphabet():
    report = verify_claim("PAL_BOUND", "a", 3)
    assert report.words_checked == 4
    assert report.verified


def test_verify_length_zero():
    report = verify_claim("THM_FGC", "ab", 0)
    assert report.words_checked == 1
    assert report.verified


def test_all_claims_hold_at_small_scale():
    for claim in CLAIMS:
        alphabet = "abc" if claim == "BINARY_TRAP" else "ab"
        report = verify_claim(claim, alphabet, 7)
        assert report.verified, (claim, report.counterexamples[:3])


def test_rich_palindrome_identity_holds_on_ternary_words():
    report = verify_claim("THM_FGC", "abc", 9)
    assert report.words_checked == 29524
    assert report.verified


def test_unknown_claim_rejected():
    with pytest.raises(ValueError, match="unknown claim"):
        verify_claim("NOPE", "ab", 3)


def test_budget_guard():
    with pytest.raises(BudgetExceededError):
        verify_claim("PROP1", "ab", 5, budget=10)
    # exactly at the budget is fine
    assert verify_claim("PROP1", "ab", 3, budget=word_count(2, 3)).verified


def test_parallel_equals_sequential():
    seq = verify_claim("THM_MAIN", "ab", 9, workers=1)
    par = verify_claim("THM_MAIN", "ab", 9, workers=4)
    assert seq.to_json_dict() == par.to_json_dict()
    rerun = verify_claim("THM_MAIN", "ab", 9, workers=1)
    assert rerun.to_json_dict() == seq.to_json_dict()


def test_report_json_shape():
    d = verify_claim("PROP1", "ab", 4).to_json_dict()
    assert d["schema_version"] == 1
    assert d["claim"] == "PROP1"
    assert d["alphabet"] == "ab"
    assert d["max_len"] == 4
    assert d["words_checked"] == 31
    assert d["verified"] is True
    assert d["counterexamples"] == []
    assert "elapsed" not in str(d.keys())


def test_find_class_members_examples():
    assert "aabbaa" in find_class_members("rich_not_trapezoidal", "ab", 6)
    assert "aaabab" in find_class_members("trapezoidal_not_sturmian", "ab", 6)
    assert find_class_members("trapezoidal_not_sturmian", "ab", 3) == []
    assert find_class_members("sturmian_palindrome", "ab", 1) == ["a", "b"]


def test_find_class_members_is_sorted_and_filtered():
    members = find_class_members("palindrome", "ab", 4)
    assert members == sorted(members)
    assert all(len(w) == 4 and w == w[::-1] for w in members)
    assert members == ["aaaa", "abba", "baab", "bbbb"]


def test_find_class_members_unknown_predicate():
    with pytest.raises(ValueError, match="unknown predicate"):
        find_class_members("sparkly", "ab", 3)


def test_census_balanced_row():
    table = census("ab", 4)
    assert table.lengths == [1, 2, 3, 4]
    assert table.total == [2, 4, 8, 16]
    assert table.counts["balanced"] == [2, 4, 8, 14]


def test_census_rich_and_unary_rows():
    assert census("ab", 2).counts["rich"] == [2, 4]
    assert census("a", 3).counts["trapezoidal"] == [1, 1, 1]


def test_census_internal_consistency():
    table = census("ab", 7)
    for i, n in enumerate(table.lengths):
        assert table.total[i] == 2**n
        # trapezoidal words are rich
        assert table.counts["trapezoidal"][i] <= table.counts["rich"][i]
        # the three faces of the Sturmian-palindrome equivalence agree
        b_prime_words = find_class_members("condition_B_prime", "ab", n)
        assert all(w == w[::-1] for w in b_prime_words)
        trap_palindromes = [
            w for w in find_class_members("trapezoidal", "ab", n) if w == w[::-1]
        ]
        assert (
            table.counts["sturmian_palindrome"][i]
            == len(b_prime_words)
            == len(trap_palindromes)
        )


def test_census_budget_guard():
    with pytest.raises(BudgetExceededError):
        census("ab", 10, budget=100)


def test_predicate_registry_names():
    for name in (
        "palindrome",
        "rich",
        "trapezoidal",
        "balanced",
        "finite_sturmian",
        "sturmian_palindrome",
        "condition_B",
        "condition_B_prime",
        "rich_not_trapezoidal",
        "trapezoidal_not_sturmian",
    ):
        assert name in PREDICATES


def test_predicates_tolerate_wide_alphabets():
    # enumeration across 3+ symbols must not raise from the balance checks
    members = find_class_members("balanced", "abc", 2)
    assert "ab" in members
    trapezoidal = find_class_members("trapezoidal", "abc", 3)
    assert trapezoidal
    assert all(len(set(w)) <= 2 for w in trapezoidal)
