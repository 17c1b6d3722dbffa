from itertools import product

import pytest

from ulamgames.automaton import NotExtensible, build_from_forbidden
from ulamgames.classify import (
    MINIMAL_OBSCURER_PAIRS,
    OBSCURER,
    SEEKER,
    SPORADIC_SEEKER_PAIRS,
    FlipUndefined,
    enumerate_and_compare,
    expands,
    flip,
    flip_criterion,
    forbidden_sets,
    invert,
    minimality_check,
    reduce_forbidden,
    risk,
    rsharp_member,
    solver_verdict,
    theory_verdict,
    write_pair_table,
)


def risk_oracle(word, forbidden):
    best = 0
    for q in forbidden:
        for l in range(min(len(word), len(q)), 0, -1):
            if word[len(word) - l :] == q[:l]:
                best = max(best, l)
                break
    return best


def words_up_to(max_len):
    return [
        "".join(bits)
        for length in range(max_len + 1)
        for bits in product("01", repeat=length)
    ]


# -- risk --


def test_risk_examples_match_brute_force():
    cases = [
        ("11", {"000"}, 0, None),
        ("100", {"0001"}, 2, "0001"),
        ("0", {"01", "10"}, 1, "01"),
        ("", {"01"}, 0, None),
    ]
    for word, forbidden, value, witness in cases:
        report = risk(word, forbidden)
        assert report.value == risk_oracle(word, forbidden) == value
        assert report.witness == witness
        if report.witness is not None:
            assert report.witness.startswith(word[len(word) - report.value :])


def test_risk_never_exceeds_word_length():
    words = words_up_to(4)
    for word in words:
        for q in ("00", "0101"):
            assert risk(word, {q}).value <= len(word)


# -- flips --


def test_flip_examples():
    assert flip("0001", 2) == "001"
    assert flip("10", 0) == "0"
    assert flip("00001", 3) == "0001"


def test_flip_requires_enough_length():
    with pytest.raises(FlipUndefined):
        flip("01", 2)
    with pytest.raises(FlipUndefined):
        flip("0", 1)


def test_flip_criterion_values():
    # {000}: already at level 1 both flips ("1" and "01") carry no risk
    assert flip_criterion({"000"}) == 1
    assert flip_criterion({"00"}) == 1
    # {01}: the level-1 flip "00" keeps risk 1, so nothing certifies
    assert flip_criterion({"01"}) is None
    # single letters leave no level to test
    assert flip_criterion({"0"}) is None


def test_flip_certificates_are_sound_up_to_length_four():
    for size in (1, 2):
        for words in forbidden_sets(4, size):
            level = flip_criterion(words)
            if level is None:
                continue
            assert solver_verdict(words) == OBSCURER, sorted(words)


# -- expansion and inversion --


def test_expands_examples():
    assert expands({"00"}, {"000", "1001"})
    assert not expands({"00"}, {"0101"})
    assert expands({"0"}, {"0"})


def test_invert_examples():
    assert invert("0010") == "1101"
    assert invert(invert("011010")) == "011010"
    assert invert(frozenset({"00", "010"})) == frozenset({"11", "101"})


# -- the no-00 pattern set --


def test_pattern_set_examples():
    assert rsharp_member("10101")
    assert rsharp_member("110111")
    assert not rsharp_member("0110")
    assert rsharp_member("")
    assert rsharp_member("1")
    assert not rsharp_member("00")


def displayed_form_words(max_len):
    """All words 1^a (0101...0)_b 1^c with the middle block empty or of
    odd length, up to the length bound."""
    out = set()
    for a in range(max_len + 1):
        for b in range(0, max_len + 1):
            if b != 0 and b % 2 == 0:
                continue
            block = "".join("0" if i % 2 == 0 else "1" for i in range(b))
            for c in range(max_len + 1):
                word = "1" * a + block + "1" * c
                if len(word) <= max_len:
                    out.add(word)
    return out


def test_pattern_set_matches_displayed_form():
    allowed = displayed_form_words(12)
    for word in words_up_to(12):
        assert rsharp_member(word) == (word in allowed), word


def test_pattern_set_matches_avoidance_graph():
    for word in words_up_to(12):
        bound = max(2, len(word))
        forbidden = {"00"} | {"0" + "1" * k + "0" for k in range(2, bound + 1)}
        g = build_from_forbidden(forbidden)
        assert rsharp_member(word) == g.satisfies(word), word


# -- closed-form verdicts --


def test_reduce_forbidden():
    assert reduce_forbidden({"0", "00", "010"}) == frozenset({"0"})
    assert reduce_forbidden({"00", "010"}) == frozenset({"00", "010"})


def test_theory_verdict_singletons():
    for word in ("0", "1", "01", "10"):
        assert theory_verdict({word}) == SEEKER
    for word in ("00", "11", "000", "010", "0101"):
        assert theory_verdict({word}) == OBSCURER


def test_theory_verdict_examples():
    assert theory_verdict({"0", "111000"}) == SEEKER
    assert theory_verdict({"010", "1100"}) == SEEKER
    assert theory_verdict({"00", "010", "011110"}) == SEEKER  # runs 1 and 4
    assert theory_verdict({"00", "0110", "011110"}) == OBSCURER  # runs 2 and 4
    assert theory_verdict({"000", "111", "0101"}) is None
    assert theory_verdict({"000", "010"}) == OBSCURER


def test_theory_verdict_inversion_invariant():
    for words in forbidden_sets(4, 2):
        assert theory_verdict(words) == theory_verdict(invert(words))


def test_sporadic_tables_shape():
    assert len(SPORADIC_SEEKER_PAIRS) == 28
    assert len(MINIMAL_OBSCURER_PAIRS) == 16
    for pair in SPORADIC_SEEKER_PAIRS + MINIMAL_OBSCURER_PAIRS:
        assert len(pair) == 2
        a, b = pair
        assert a not in b and b not in a


def test_sporadic_tables_match_solver():
    for pair in SPORADIC_SEEKER_PAIRS:
        assert solver_verdict(pair) == SEEKER, sorted(pair)
    for pair in MINIMAL_OBSCURER_PAIRS:
        assert solver_verdict(pair) == OBSCURER, sorted(pair)


# -- solver verdicts --


def test_solver_verdict_examples():
    assert solver_verdict({"000", "101"}) == SEEKER
    assert solver_verdict({"000", "010"}) == OBSCURER
    assert solver_verdict({"0011", "0101"}) == SEEKER


def test_solver_verdict_propagates_unplayable_sets():
    with pytest.raises(NotExtensible):
        solver_verdict({"0", "1"})


def test_theory_matches_solver_up_to_length_four():
    for size in (1, 2):
        for words in forbidden_sets(4, size):
            try:
                verdict = solver_verdict(words)
            except NotExtensible:
                continue
            assert theory_verdict(words) == verdict, sorted(words)


def test_expansion_monotonicity_of_verdicts():
    playable = {}
    for size in (1, 2):
        for words in forbidden_sets(3, size):
            try:
                playable[words] = solver_verdict(words)
            except NotExtensible:
                continue
    for s1, v1 in playable.items():
        for s2, v2 in playable.items():
            if expands(s1, s2) and v2 == SEEKER:
                assert v1 == SEEKER, (sorted(s1), sorted(s2))


# -- enumeration and tables --


def test_enumerate_singletons_up_to_two():
    rows = enumerate_and_compare(2, 1)
    assert [(r.s1, r.solver) for r in rows] == [
        ("0", SEEKER),
        ("1", SEEKER),
        ("00", OBSCURER),
        ("01", SEEKER),
        ("10", SEEKER),
        ("11", OBSCURER),
    ]
    assert all(r.agree for r in rows)
    assert all(r.s2 == "" for r in rows)


def test_enumerate_pairs_skips_unplayable_and_redundant():
    rows = enumerate_and_compare(2, 2)
    names = {(r.s1, r.s2) for r in rows}
    assert ("0", "1") not in names  # unplayable
    assert ("0", "00") not in names  # redundant
    assert ("00", "11") in names
    assert all(r.agree for r in rows)


def test_csv_emission(tmp_path):
    rows = enumerate_and_compare(2, 1)
    out = tmp_path / "table.csv"
    with open(out, "w", encoding="utf-8") as handle:
        write_pair_table(rows, handle)
    lines = out.read_text().splitlines()
    assert lines[0] == "s1,s2,theory,solver,agree"
    assert lines[1] == "0,,seeker,seeker,true"
    assert len(lines) == 7


# -- minimality --


def test_minimality_examples():
    assert minimality_check({"000", "010"})
    assert minimality_check({"0011", "1010"})
    # shrinking 0100 to 010 still loses, so the pair is not minimal
    assert not minimality_check({"000", "0100"})
    assert not minimality_check({"01"})  # winning sets are never minimal losses


def test_minimality_families():
    assert minimality_check({"00", "0110"})
    assert minimality_check({"11", "10001"})
