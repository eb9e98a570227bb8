"""Partizan subtraction games on a single heap.

Left removes amounts from one finite set, Right from another, and whoever
cannot move loses.  The package computes outcome labels (P, N, L, R) per
heap size, detects the eventually periodic structure of the label sequence,
classifies its long-run behavior, predicts it in closed form for the solved
families, ties it to coin-representability, and renders class maps over
rule-parameter grids.
"""

from .core import (
    EmptySet,
    EventualForm,
    NonPositiveMove,
    DuplicateMove,
    Outcome,
    Ruleset,
    SequenceClass,
    conjugate,
    conjugate_label,
    make_ruleset,
    parse_ruleset,
)
from .engine import (
    OutcomeSequence,
    PeriodNotFound,
    brute_force_outcome,
    classify,
    default_cap,
    detect_eventual_form,
    outcome,
    outcome_sequence,
    winning_moves,
)
from .numeric import (
    CoinSet,
    ContainsOne,
    GcdNotOne,
    frobenius,
    knapsack_to_game,
    representable,
)
from .geometry import (
    ConditionReport,
    DegenerateSlope,
    OutOfQuadrant,
    PrimitiveLine,
    TSetParams,
    t_distance,
    t_lines,
    t_membership,
    two_vs_two_condition,
)
from .oracles import (
    IntervalFamily,
    Prediction,
    PredictionKind,
    SizeMismatch,
    construct_left_spoiler,
    construct_right_dominator,
    construct_right_fair,
    interval_family,
    interval_family_violations,
    interval_oracle,
    oracle_full_sequence_far,
    oracle_one_vs_one,
    oracle_ones_to_k,
    oracle_two_vs_one,
    perstay_check,
)
from .mapgen import (
    DominationMap,
    UnknownFormat,
    cell_ruleset,
    domination_map,
    render_map,
    summary,
)
from .verify import SUITE_NAMES, SuiteResult, format_report, run_all, run_suite

__version__ = "1.0.0"

__all__ = [
    "EmptySet",
    "EventualForm",
    "NonPositiveMove",
    "DuplicateMove",
    "Outcome",
    "Ruleset",
    "SequenceClass",
    "conjugate",
    "conjugate_label",
    "make_ruleset",
    "parse_ruleset",
    "OutcomeSequence",
    "PeriodNotFound",
    "brute_force_outcome",
    "classify",
    "default_cap",
    "detect_eventual_form",
    "outcome",
    "outcome_sequence",
    "winning_moves",
    "CoinSet",
    "ContainsOne",
    "GcdNotOne",
    "frobenius",
    "knapsack_to_game",
    "representable",
    "ConditionReport",
    "DegenerateSlope",
    "OutOfQuadrant",
    "PrimitiveLine",
    "TSetParams",
    "t_distance",
    "t_lines",
    "t_membership",
    "two_vs_two_condition",
    "IntervalFamily",
    "Prediction",
    "PredictionKind",
    "SizeMismatch",
    "construct_left_spoiler",
    "construct_right_dominator",
    "construct_right_fair",
    "interval_family",
    "interval_family_violations",
    "interval_oracle",
    "oracle_full_sequence_far",
    "oracle_one_vs_one",
    "oracle_ones_to_k",
    "oracle_two_vs_one",
    "perstay_check",
    "DominationMap",
    "UnknownFormat",
    "cell_ruleset",
    "domination_map",
    "render_map",
    "summary",
    "SUITE_NAMES",
    "SuiteResult",
    "format_report",
    "run_all",
    "run_suite",
    "__version__",
]
