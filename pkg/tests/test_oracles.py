"""Closed-form predictions checked against each other and the engine."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from partizan import (
    EventualForm,
    IntervalFamily,
    Prediction,
    PredictionKind,
    SequenceClass,
    SizeMismatch,
    classify,
    construct_left_spoiler,
    construct_right_dominator,
    construct_right_fair,
    detect_eventual_form,
    interval_family,
    interval_family_violations,
    interval_oracle,
    make_ruleset,
    oracle_full_sequence_far,
    oracle_one_vs_one,
    oracle_ones_to_k,
    oracle_two_vs_one,
    outcome,
    outcome_sequence,
    perstay_check,
    two_vs_two_condition,
)


# ---------------------------------------------------------------- Prediction

def test_prediction_invariants():
    form = EventualForm("", "PLN")
    with pytest.raises(ValueError):
        Prediction("t", PredictionKind.FULL_SEQUENCE, True)  # no payload
    with pytest.raises(ValueError):
        Prediction("t", PredictionKind.FULL_SEQUENCE, True, reason="r", form=form)
    with pytest.raises(ValueError):
        Prediction("t", PredictionKind.FULL_SEQUENCE, False)  # no reason
    with pytest.raises(ValueError):
        Prediction("t", PredictionKind.FULL_SEQUENCE, False, reason="r", form=form)


def test_prediction_records():
    assert oracle_one_vs_one(1, 2).to_record() == {
        "theorem": "one-vs-one",
        "kind": "full-sequence",
        "applicable": True,
        "reason": "",
        "preperiod": "",
        "period": "PLN",
        "class": "WD-Left",
    }
    assert oracle_full_sequence_far(1, 2, 2).to_record() == {
        "theorem": "far-regime",
        "kind": "full-sequence",
        "applicable": False,
        "reason": "requires c > b",
    }


# ----------------------------------------------------------- single-move sets

def test_one_vs_one_known():
    pred = oracle_one_vs_one(1, 2)
    assert pred.applicable and pred.kind is PredictionKind.FULL_SEQUENCE
    assert (pred.form.preperiod, pred.form.period) == ("", "PLN")
    assert pred.seq_class is SequenceClass.WD_LEFT
    assert oracle_one_vs_one(2, 5).form.period == "PPLLLNN"
    assert oracle_one_vs_one(3, 3).reason == "requires 0 < a < b"
    assert oracle_one_vs_one(0, 2).reason == "requires 0 < a < b"


@given(st.integers(1, 12), st.integers(1, 12))
@settings(max_examples=100)
def test_one_vs_one_matches_engine(a, b):
    """The predicted word is the exact sequence, not just a tail."""
    pred = oracle_one_vs_one(a, b)
    if a >= b:
        assert not pred.applicable
        return
    span = 3 * (a + b)
    rules = make_ruleset((a,), (b,))
    assert pred.form.expand(span) == outcome_sequence(rules, span).word


# ------------------------------------------------------------ two left moves

def test_two_vs_one_known():
    assert oracle_two_vs_one(1, 5, 3).form.period == "PLLN"
    assert oracle_two_vs_one(3, 7, 1).form.period == "PRRN"
    ui = oracle_two_vs_one(2, 6, 2)
    assert ui.form.period == "PPNN"
    assert ui.seq_class is SequenceClass.UI
    tail = oracle_two_vs_one(1, 2, 3)
    assert tail.kind is PredictionKind.CLASS_ONLY
    assert tail.seq_class is SequenceClass.SD_LEFT
    assert tail.form is None
    assert oracle_two_vs_one(3, 3, 1).reason == "requires 0 < a < b"
    assert oracle_two_vs_one(1, 2, 0).reason == "requires c >= 1"


@given(st.integers(1, 9), st.integers(1, 9), st.integers(1, 9))
@settings(max_examples=100)
def test_two_vs_one_matches_engine(a, b, c):
    """Periodic-tail cases align with the detected form; tail cases classify."""
    pred = oracle_two_vs_one(a, b, c)
    if not pred.applicable:
        return
    rules = make_ruleset((a, b), (c,))
    if pred.kind is PredictionKind.CLASS_ONLY:
        assert classify(rules) is pred.seq_class
    else:
        assert pred.form.agrees_eventually(detect_eventual_form(rules))


# ------------------------------------------------------------ far right moves

def test_far_regime_known():
    pred = oracle_full_sequence_far(1, 2, 3)
    assert (pred.form.preperiod, pred.form.period) == ("PLLN", "L")
    pred = oracle_full_sequence_far(1, 2, 3, 6)
    assert (pred.form.preperiod, pred.form.period) == ("PLLNLLN", "L")
    assert oracle_full_sequence_far(2, 3, 9).reason == "requires b >= 2a"
    assert oracle_full_sequence_far(1, 2, 2).reason == "requires c > b"
    assert oracle_full_sequence_far(1, 2, 3, 5).reason == "requires d > c+b"


@given(
    st.integers(1, 3),
    st.integers(0, 4),
    st.integers(1, 18),
    st.one_of(st.none(), st.integers(1, 25)),
)
@settings(max_examples=100)
def test_far_regime_matches_engine(a, b_extra, c_extra, d_extra):
    """Whenever the oracle speaks, its word is the exact engine sequence."""
    b = 2 * a + b_extra
    c = b + c_extra
    d = None if d_extra is None else c + b + d_extra
    pred = oracle_full_sequence_far(a, b, c, d)
    assert pred.applicable
    right = (c,) if d is None else (c, d)
    rules = make_ruleset((a, b), right)
    span = pred.form.preperiod_len + 40
    assert pred.form.expand(span) == outcome_sequence(rules, span).word


# ------------------------------------------------------------- run of 1..k

def test_ones_to_k_known():
    pred = oracle_ones_to_k(2, (3, 4))
    assert pred.kind is PredictionKind.FULL_SEQUENCE
    assert (pred.form.preperiod, pred.form.period) == ("", "PLLNN")
    sparse = oracle_ones_to_k(2, (3, 5))
    assert sparse.kind is PredictionKind.CLASS_ONLY
    assert sparse.seq_class is SequenceClass.SD_LEFT
    impartial = oracle_ones_to_k(2, (1, 2))
    assert impartial.seq_class is SequenceClass.UI
    with pytest.raises(SizeMismatch):
        oracle_ones_to_k(2, (3,))
    with pytest.raises(ValueError):
        oracle_ones_to_k(0, ())
    with pytest.raises(ValueError):
        oracle_ones_to_k(True, (3,))


@given(st.integers(1, 4), st.data())
@settings(max_examples=100)
def test_ones_to_k_matches_engine(k, data):
    right = data.draw(st.sets(st.integers(1, 10), min_size=k, max_size=k))
    pred = oracle_ones_to_k(k, right)
    rules = make_ruleset(range(1, k + 1), right)
    if pred.kind is PredictionKind.FULL_SEQUENCE:
        span = 3 * pred.form.period_len
        assert pred.form.expand(span) == outcome_sequence(rules, span).word
    else:
        assert classify(rules) is pred.seq_class


# ------------------------------------------------------------------ stability

def test_perstay_known_base():
    base = make_ruleset((2, 3), (1,))
    grown = perstay_check(base, 7)
    assert grown.applicable
    assert grown.seq_class is SequenceClass.SD_LEFT
    assert grown.preperiod_bound == 100
    assert perstay_check(base, 6).reason == "d too small: need d > 6"
    assert classify(make_ruleset((2, 3), (1, 7))) is SequenceClass.SD_LEFT
    assert classify(make_ruleset((2, 3), (1, 6))) is SequenceClass.FAIR


def test_perstay_declines():
    assert perstay_check(make_ruleset((2,), (1,)), 50).reason == "needs two left moves"
    impartial = make_ruleset((1, 2), (1, 2))
    assert perstay_check(impartial, 50).reason == "base not eventually L"


@given(st.integers(7, 60))
@settings(max_examples=30, deadline=None)
def test_perstay_bound_is_honest(d):
    """The grown game stays eventually L with preperiod within the bound."""
    base = make_ruleset((2, 3), (1,))
    pred = perstay_check(base, d)
    assert pred.applicable
    grown = detect_eventual_form(make_ruleset((2, 3), (1, d)))
    assert grown.seq_class is SequenceClass.SD_LEFT
    assert grown.preperiod_len <= pred.preperiod_bound


# -------------------------------------------------------------- constructions

def test_right_dominator():
    rules = construct_right_dominator((1,))
    assert str(rules) == "1/1,2"
    assert classify(rules) is SequenceClass.SD_RIGHT
    for sl in ((1, 2), (2, 3), (1, 4)):
        grown = construct_right_dominator(sl)
        assert grown.left == make_ruleset(sl, sl).left
        assert set(grown.left) < set(grown.right)
        assert classify(grown) is SequenceClass.SD_RIGHT


def test_right_fair():
    rules, n = construct_right_fair((1,))
    assert (str(rules), n) == ("1/2,3", 3)
    for sl in ((1,), (1, 2), (2, 3)):
        rules, n = construct_right_fair(sl)
        assert n > max(sl)
        assert n in rules.right
        for k in range(1, 7):
            assert outcome(rules, k * n).label == "R"
        assert classify(rules) is not SequenceClass.SD_LEFT


def test_left_spoiler():
    rules, n0 = construct_left_spoiler((1,))
    assert (str(rules), n0) == ("1/2", 3)
    for sl in ((1,), (1, 2), (2, 3), (1, 3)):
        rules, n0 = construct_left_spoiler(sl)
        assert n0 > max(sl)
        assert not set(rules.left) & set(rules.right)
        for k in range(1, 7):
            assert outcome(rules, k * n0).oL == "R"
        assert classify(rules) is not SequenceClass.SD_LEFT


# ------------------------------------------------------------ interval family

def test_interval_family_small():
    fam = interval_family(1, 2, 3, 6)
    assert fam.index_ceiling == 1
    assert fam.p_intervals == [((0, 0), (0, 1))]
    assert [span for _, span in fam.n_intervals] == [(-2, 0), (3, 4), (6, 7)]
    assert fam.p_interval(0, 1) is None
    assert fam.n_interval(2, 0) is None
    assert fam.label_at(0) == "P"
    assert fam.label_at(3) == "N"
    assert fam.label_at(1) == "L"
    with pytest.raises(ValueError):
        fam.label_at(-1)
    assert fam.expand(10) == "PLLNLLNLLLL"
    form = fam.to_eventual_form()
    assert (form.preperiod, form.period) == ("PLLNLLN", "L")
    assert interval_family_violations(fam) == []
    with pytest.raises(ValueError):
        interval_family(2, 2, 3, 6)
    with pytest.raises(ValueError):
        interval_family(1, 2, 6, 3)


def test_interval_family_matches_far_oracle():
    """Two independent descriptions of ({a,b},{c,d}) far games must agree."""
    for a, b, c, d in ((1, 2, 3, 6), (1, 2, 4, 10), (2, 5, 11, 30)):
        far = oracle_full_sequence_far(a, b, c, d)
        if not far.applicable:
            continue
        fam_form = interval_family(a, b, c, d).to_eventual_form()
        span = max(far.form.preperiod_len, fam_form.preperiod_len) + 10
        assert far.form.expand(span) == fam_form.expand(span)


@given(st.lists(st.integers(1, 40), min_size=4, max_size=4, unique=True), st.integers(0, 300))
@settings(max_examples=100)
def test_interval_family_label_consistency(params, n):
    a, b, c, d = sorted(params)
    fam = interval_family(a, b, c, d)
    assert fam.label_at(n) == fam.expand(max(n, 1))[n]
    assert fam.to_eventual_form().seq_class is SequenceClass.SD_LEFT


def test_guard_window_intrusion_counterexample():
    """A P interval may sit in the window before an N interval even when the
    distance condition holds; the labels themselves stay exact."""
    a, b, c, d = 3, 6, 7, 252
    report = two_vs_two_condition(a, b, c, d)
    assert report.holds
    assert (report.distance, report.threshold) == (116, 60)
    fam = interval_family(a, b, c, d)
    bad = interval_family_violations(fam)
    assert bad == [
        "(ii-P) P(0, 0)=(0, 3) intrudes on the 6 positions before N(0, 1)"
    ]
    # the intrusion is cosmetic: the predicted sequence is still exact
    form = fam.to_eventual_form()
    span = form.preperiod_len + 3 * (a + b)
    word = outcome_sequence(make_ruleset((a, b), (c, d)), span).word
    assert form.expand(span) == word


def test_guard_window_clean_when_c_large():
    """With c >= a+b the guard windows are empty of intervals entirely."""
    for a, b, c, d in ((1, 2, 3, 100), (2, 3, 7, 200), (3, 6, 11, 400)):
        fam = interval_family(a, b, c, d)
        assert c >= a + b
        assert interval_family_violations(fam) == []


def test_interval_oracle():
    pred = interval_oracle(1, 2, 3, 100)
    assert pred.applicable and pred.kind is PredictionKind.FULL_SEQUENCE
    span = pred.form.preperiod_len + 30
    word = outcome_sequence(make_ruleset((1, 2), (3, 100)), span).word
    assert pred.form.expand(span) == word
    assert interval_oracle(1, 2, 3, 6).reason == "condition failed: distance 1 < 20"
    assert interval_oracle(2, 2, 3, 6).reason == "requires a < b < c < d"
    assert interval_oracle(1, 2, 6, 3).reason == "requires a < b < c < d"
