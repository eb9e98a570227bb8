"""Rulesets, outcome labels, sequence classes, and eventual forms."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from partizan import (
    DuplicateMove,
    EmptySet,
    EventualForm,
    NonPositiveMove,
    Outcome,
    SequenceClass,
    conjugate,
    conjugate_label,
    make_ruleset,
    parse_ruleset,
)

move_sets = st.sets(st.integers(1, 30), min_size=1, max_size=5)


def test_make_ruleset_sorts_and_freezes():
    rules = make_ruleset([3, 1, 2], (5, 4))
    assert rules.left == (1, 2, 3)
    assert rules.right == (4, 5)
    assert rules.max_move == 5


def test_make_ruleset_rejects_bad_moves():
    with pytest.raises(EmptySet):
        make_ruleset([], [1])
    with pytest.raises(NonPositiveMove):
        make_ruleset([0], [1])
    with pytest.raises(NonPositiveMove):
        make_ruleset([1], [-2])
    with pytest.raises(DuplicateMove):
        make_ruleset([1, 1], [2])
    with pytest.raises(NonPositiveMove):
        make_ruleset([True], [1])


def test_parse_ruleset_round_trip():
    rules = parse_ruleset("2,3/1,6")
    assert rules.left == (2, 3)
    assert rules.right == (1, 6)
    assert str(rules) == "2,3/1,6"
    assert parse_ruleset(str(rules)) == rules


def test_parse_ruleset_rejects_junk():
    for text in ("", "1,2", "1,2/", "/1", "1,2/3,x", "1,2/3/4"):
        with pytest.raises(ValueError):
            parse_ruleset(text)


@given(move_sets, move_sets)
@settings(max_examples=100)
def test_conjugate_is_an_involution(left, right):
    """Swapping the two move sets twice gives back the original game."""
    rules = make_ruleset(left, right)
    assert conjugate(conjugate(rules)) == rules
    assert conjugate(rules).left == rules.right


def test_outcome_label_bijection():
    """The four (oL, oR) pairs map onto the four labels and back."""
    for label in "PNLR":
        assert Outcome.from_label(label).label == label
    assert Outcome("L", "L").label == "L"
    assert Outcome("R", "R").label == "R"
    assert Outcome("L", "R").label == "N"
    assert Outcome("R", "L").label == "P"


def test_conjugate_label_swaps_sides():
    assert [conjugate_label(x) for x in "PNLR"] == ["P", "N", "R", "L"]


def test_sequence_class_from_period():
    cases = {
        "L": SequenceClass.SD_LEFT,
        "R": SequenceClass.SD_RIGHT,
        "PLLN": SequenceClass.WD_LEFT,
        "PRRN": SequenceClass.WD_RIGHT,
        "PRNLPNNN": SequenceClass.FAIR,
        "PN": SequenceClass.UI,
    }
    for word, cls in cases.items():
        assert SequenceClass.from_period(word) is cls
    assert str(SequenceClass.SD_LEFT) == "SD-Left"


def test_eventual_form_label_at_and_expand():
    form = EventualForm("PNLN", "L")
    assert form.expand(7) == "PNLNLLLL"
    assert [form.label_at(n) for n in (0, 3, 4, 100)] == ["P", "N", "L", "L"]
    pure = EventualForm("", "PLN")
    assert pure.expand(6) == "PLNPLNP"
    assert pure.label_at(3 * 10**9) == "P"


def test_eventual_form_conjugate_swaps_letters():
    form = EventualForm("PRNL", "PLLN")
    flipped = form.conjugate()
    assert flipped.preperiod == "PLNR"
    assert flipped.period == "PRRN"
    assert flipped.conjugate() == form


def test_eventual_form_minimality():
    assert EventualForm("", "PLN").is_minimal()
    assert not EventualForm("", "PLNPLN").is_minimal()  # period not primitive
    assert not EventualForm("PL", "L").is_minimal()  # preperiod tail foldable
    assert EventualForm("PN", "L").is_minimal()


def test_eventual_form_agrees_eventually():
    """Forms with rotated periods describe the same tail."""
    assert EventualForm("", "PLN").agrees_eventually(EventualForm("P", "LNP"))
    assert not EventualForm("", "PLN").agrees_eventually(EventualForm("", "PLL"))


def test_eventual_form_record():
    record = EventualForm("PNLN", "L").to_record()
    assert record == {
        "preperiod": "PNLN",
        "period": "L",
        "class": "SD-Left",
    }


def test_eventual_form_rejects_bad_words():
    with pytest.raises(ValueError):
        EventualForm("", "")
    with pytest.raises(ValueError):
        EventualForm("PX", "L")
