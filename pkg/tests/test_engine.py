"""Outcome tables, period detection, and the independent game-tree cross-check."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from partizan import (
    PeriodNotFound,
    SequenceClass,
    brute_force_outcome,
    classify,
    conjugate,
    default_cap,
    detect_eventual_form,
    make_ruleset,
    outcome,
    outcome_sequence,
    winning_moves,
)

move_sets = st.sets(st.integers(1, 9), min_size=1, max_size=4)
rulesets = st.builds(make_ruleset, move_sets, move_sets)


def test_known_sequence_and_form():
    rules = make_ruleset((1, 2), (1, 3))
    assert outcome_sequence(rules, 7).word == "PNLNLLLL"
    form = detect_eventual_form(rules)
    assert (form.preperiod, form.period) == ("PNLN", "L")
    assert form.seq_class is SequenceClass.SD_LEFT
    assert classify(rules) is SequenceClass.SD_LEFT


def test_known_fair_game():
    rules = make_ruleset((2, 3), (1, 6))
    assert outcome_sequence(rules, 3).word == "PRNL"
    form = detect_eventual_form(rules)
    assert (form.preperiod, form.period) == ("", "PRNLPNNN")
    assert form.seq_class is SequenceClass.FAIR


def test_known_small_games():
    assert detect_eventual_form(make_ruleset((1,), (2,))).period == "PLN"
    assert detect_eventual_form(make_ruleset((2, 3), (1,))).preperiod == "PRNLPN"
    assert detect_eventual_form(make_ruleset((2, 3), (1,))).period == "L"
    assert outcome(make_ruleset((1, 2), (1, 3)), 0).label == "P"
    assert outcome(make_ruleset((1, 2), (1, 3)), 1).label == "N"


def test_outcome_components():
    out = outcome(make_ruleset((2, 3), (1, 6)), 2)
    assert (out.oL, out.oR, out.label) == ("L", "R", "N")


def test_winning_moves():
    rules = make_ruleset((1, 2), (1, 3))
    # position 3 is N: Left wins only by taking 1 (to the L at 2)
    assert winning_moves(rules, 3, "left") == {1}
    assert winning_moves(rules, 3, "right") == {3}
    assert winning_moves(rules, 1, "right") == {1}
    assert winning_moves(rules, 0, "left") == set()
    with pytest.raises(ValueError):
        winning_moves(rules, 3, "middle")


def test_outcome_sequence_indexing():
    seq = outcome_sequence(make_ruleset((1,), (2,)), 10)
    assert seq.n_max == 10
    assert seq.outcome_at(4).label == seq.word[4]
    with pytest.raises(IndexError):
        seq.outcome_at(11)


def test_default_cap_floor_and_growth():
    assert default_cap(make_ruleset((1,), (2,))) == 10_000
    assert default_cap(make_ruleset((1,), (100,))) == 100_000


def test_cap_validation_and_period_not_found():
    rules = make_ruleset((2, 3), (1, 40))
    with pytest.raises(ValueError):
        detect_eventual_form(rules, 79)  # below twice the largest move
    with pytest.raises(PeriodNotFound) as err:
        detect_eventual_form(rules, 80)
    assert err.value.cap == 80
    assert err.value.rules == rules
    form = detect_eventual_form(rules)  # default cap is enough
    assert form.seq_class is SequenceClass.SD_LEFT


@given(rulesets)
@settings(max_examples=100)
def test_detected_form_reproduces_the_sequence(rules):
    """Expanding the detected form letter by letter matches the raw table."""
    form = detect_eventual_form(rules)
    span = form.preperiod_len + 2 * form.period_len + 20
    assert form.expand(span) == outcome_sequence(rules, span).word


@given(rulesets)
@settings(max_examples=100)
def test_detected_form_is_minimal(rules):
    """Detection returns a primitive period and a non-foldable preperiod."""
    assert detect_eventual_form(rules).is_minimal()


@given(rulesets)
@settings(max_examples=50)
def test_game_tree_agreement(rules):
    """The position table agrees with top-down game-tree search on every heap."""
    word = outcome_sequence(rules, 30).word
    for n in range(31):
        assert brute_force_outcome(rules, n).label == word[n]


@given(rulesets)
@settings(max_examples=50)
def test_conjugation_symmetry(rules):
    """Swapping move sets mirrors the detected form letterwise."""
    assert detect_eventual_form(rules).conjugate() == detect_eventual_form(conjugate(rules))


@given(rulesets, st.integers(0, 200))
@settings(max_examples=100)
def test_window_determinism(rules, n):
    """Positions with equal trailing windows continue identically.

    The next label depends only on the previous max_move labels, so two
    positions sharing that window agree one step later as well.
    """
    m = rules.max_move
    word = outcome_sequence(rules, n + 2 * m + 1).word
    for i in range(n + 1):
        for j in range(i + 1, n + 2):
            if word[i : i + m] == word[j : j + m]:
                assert word[i + m] == word[j + m]
                break


def test_zero_heap_is_previous_player_win():
    for rules in (make_ruleset((1,), (1,)), make_ruleset((5, 7), (2,))):
        assert outcome(rules, 0).label == "P"
