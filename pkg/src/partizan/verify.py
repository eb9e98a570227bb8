"""Self-verification suites: every proved statement checked against the engine.

Each suite replays one body of results over a deterministic sample of games
and reports pass/fail with a check count.  run_all shares a context so that
every eventual form classified anywhere feeds the cross-cutting
forbidden-period suite at the end.  Per-suite RNG streams are derived by
hashing the user seed with the suite name, so adding or reordering suites
never shifts another suite's sample.
"""

from __future__ import annotations

import hashlib
import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .core import EventualForm, Ruleset, SequenceClass, conjugate, make_ruleset
from .engine import (
    PeriodNotFound,
    brute_force_outcome,
    detect_eventual_form,
    outcome,
    outcome_sequence,
)
from .geometry import TSetParams, t_distance, t_lines, t_membership, two_vs_two_condition
from .numeric import CoinSet, frobenius, knapsack_to_game, representable
from .oracles import (
    PredictionKind,
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
from . import mapgen

_MAX_REPORTED_FAILURES = 12


@dataclass
class VerifyContext:
    """Shared state across suites of one run: collected forms and parallelism."""

    workers: int | None = None
    forms: list[tuple[str, EventualForm]] = field(default_factory=list)

    def add_form(self, rules: Ruleset, form: EventualForm) -> None:
        self.forms.append((str(rules), form))


@dataclass(frozen=True)
class SuiteResult:
    name: str
    criterion: int
    passed: bool
    checks: int
    failure_count: int
    failures: tuple[str, ...]
    seconds: float
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f" [{self.detail}]" if self.detail else ""
        head = f"{status} {self.name}: {self.checks} checks in {self.seconds:.1f}s{extra}"
        if self.passed:
            return head
        shown = "; ".join(self.failures)
        more = self.failure_count - len(self.failures)
        if more > 0:
            shown += f"; ... {more} more"
        return f"{head} -- {self.failure_count} failed: {shown}"


class _Tally:
    def __init__(self) -> None:
        self.checks = 0
        self.failure_count = 0
        self.failures: list[str] = []
        self.detail = ""

    def check(self, cond: bool, describe: str) -> bool:
        self.checks += 1
        if not cond:
            self.failure_count += 1
            if len(self.failures) < _MAX_REPORTED_FAILURES:
                self.failures.append(describe)
        return cond


def _suite_rng(seed: int, name: str) -> random.Random:
    digest = hashlib.sha256(f"{seed}:{name}".encode()).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


def _suite_example(rng: random.Random, ctx: VerifyContext, t: _Tally) -> None:
    rules = make_ruleset((1, 2), (1, 3))
    word = outcome_sequence(rules, 7).word
    t.check(word == "PNLNLLLL", f"sequence {word} != PNLNLLLL")
    form = detect_eventual_form(rules)
    t.check(
        (form.preperiod, form.period) == ("PNLN", "L"),
        f"form ({form.preperiod},{form.period}) != (PNLN,L)",
    )
    t.check(form.seq_class is SequenceClass.SD_LEFT, f"class {form.seq_class}")
    ctx.add_form(rules, form)


def _suite_one_vs_one(rng: random.Random, ctx: VerifyContext, t: _Tally) -> None:
    for b in range(2, 26):
        for a in range(1, b):
            rules = make_ruleset((a,), (b,))
            form = detect_eventual_form(rules)
            want = oracle_one_vs_one(a, b).form
            t.check(
                form.preperiod == "" and form.period == want.period,
                f"({a},{b}): got ({form.preperiod},{form.period}) want (,{want.period})",
            )
            t.check(
                form.seq_class is SequenceClass.WD_LEFT,
                f"({a},{b}): class {form.seq_class} != WD-Left",
            )
            ctx.add_form(rules, form)


def _suite_two_vs_one(rng: random.Random, ctx: VerifyContext, t: _Tally) -> None:
    for b in range(2, 21):
        for a in range(1, b):
            for c in range(1, 21):
                rules = make_ruleset((a, b), (c,))
                form = detect_eventual_form(rules)
                pred = oracle_two_vs_one(a, b, c)
                if pred.kind is PredictionKind.CLASS_ONLY:
                    t.check(
                        form.seq_class is pred.seq_class,
                        f"({a},{b},{c}): class {form.seq_class} != {pred.seq_class}",
                    )
                else:
                    t.check(
                        form.seq_class is pred.seq_class
                        and pred.form.agrees_eventually(form),
                        f"({a},{b},{c}): form ({form.preperiod},{form.period}) "
                        f"disagrees with period {pred.form.period}",
                    )
                ctx.add_form(rules, form)


def _suite_far_regime(rng: random.Random, ctx: VerifyContext, t: _Tally) -> None:
    for i in range(200):
        a = rng.randint(1, 6)
        b = 2 * a + rng.randint(0, 8)
        c = b + 1 + rng.randint(0, 30)
        if i % 2:
            d = c + b + 1 + rng.randint(0, 40)
            pred = oracle_full_sequence_far(a, b, c, d)
            rules = make_ruleset((a, b), (c, d))
        else:
            pred = oracle_full_sequence_far(a, b, c)
            rules = make_ruleset((a, b), (c,))
        if not t.check(pred.applicable, f"{rules}: oracle unexpectedly declined ({pred.reason})"):
            continue
        n_max = pred.form.preperiod_len + 50
        got = outcome_sequence(rules, n_max).word
        t.check(got == pred.form.expand(n_max), f"{rules}: sequence mismatch")
        ctx.add_form(rules, detect_eventual_form(rules))


def _suite_ones_to_k(rng: random.Random, ctx: VerifyContext, t: _Tally) -> None:
    for k in range(1, 7):
        left = tuple(range(1, k + 1))
        for c in range(0, 11):
            rules = make_ruleset(left, tuple(range(c + 1, c + k + 1)))
            form = detect_eventual_form(rules)
            word = "P" + "L" * c + "N" * k
            t.check(
                form.preperiod == "" and form.period == word,
                f"{rules}: form ({form.preperiod},{form.period}) != (,{word})",
            )
            want_class = SequenceClass.UI if c == 0 else SequenceClass.WD_LEFT
            t.check(form.seq_class is want_class, f"{rules}: class {form.seq_class}")
            ctx.add_form(rules, form)
    for _ in range(100):
        k = rng.randint(2, 6)
        while True:
            vals = tuple(sorted(rng.sample(range(1, 21), k)))
            if vals != tuple(range(vals[0], vals[0] + k)):
                break
        rules = make_ruleset(tuple(range(1, k + 1)), vals)
        pred = oracle_ones_to_k(k, vals)
        t.check(
            pred.kind is PredictionKind.CLASS_ONLY and pred.seq_class is SequenceClass.SD_LEFT,
            f"{rules}: oracle gave {pred.kind}/{pred.seq_class}",
        )
        form = detect_eventual_form(rules, 100_000)
        t.check(form.seq_class is SequenceClass.SD_LEFT, f"{rules}: class {form.seq_class}")
        ctx.add_form(rules, form)


def _suite_frobenius_preperiod(rng: random.Random, ctx: VerifyContext, t: _Tally) -> None:
    sets: list[tuple[int, ...]] = [(2, 3)]
    seen = {(2, 3)}
    while len(sets) < 30:
        vals = tuple(sorted(rng.sample(range(1, 13), rng.randint(2, 4))))
        if vals in seen:
            continue
        if math.gcd(*(v + 1 for v in vals)) != 1:
            continue
        seen.add(vals)
        sets.append(vals)
    for vals in sets:
        rules = make_ruleset(vals, (1,))
        form = detect_eventual_form(rules, 100_000)
        t.check(form.seq_class is SequenceClass.SD_LEFT, f"{rules}: class {form.seq_class}")
        want = frobenius(CoinSet(tuple(v + 1 for v in vals)))
        got = form.preperiod_len - 1
        t.check(got == want, f"{rules}: last non-L at {got}, coin bound {want}")
        ctx.add_form(rules, form)


def _suite_knapsack(rng: random.Random, ctx: VerifyContext, t: _Tally) -> None:
    for _ in range(200):
        vals = tuple(sorted(rng.sample(range(2, 13), rng.randint(1, 4))))
        coins = CoinSet(vals)
        n = rng.randint(0, 200)
        rules, heap = knapsack_to_game(coins, n)
        t.check(
            (outcome(rules, heap).oL == "R") == representable(coins, n),
            f"coins {coins} n={n}: game and coin answers disagree",
        )


def _suite_stability(rng: random.Random, ctx: VerifyContext, t: _Tally) -> None:
    base = make_ruleset((2, 3), (1,))
    for d in range(7, 41):
        rules = make_ruleset((2, 3), (1, d))
        form = detect_eventual_form(rules)
        bound = (d + 3) * (-(-(d + 3) // 1))
        t.check(form.seq_class is SequenceClass.SD_LEFT, f"d={d}: class {form.seq_class}")
        t.check(
            form.preperiod_len <= bound,
            f"d={d}: preperiod {form.preperiod_len} > bound {bound}",
        )
        pred = perstay_check(base, d)
        t.check(
            pred.applicable and pred.preperiod_bound == bound,
            f"d={d}: perstay_check gave {pred.reason or pred.preperiod_bound}",
        )
        ctx.add_form(rules, form)
    fair_rules = make_ruleset((2, 3), (1, 6))
    fair = detect_eventual_form(fair_rules)
    t.check(fair.seq_class is SequenceClass.FAIR, f"d=6: class {fair.seq_class} != Fair")
    ctx.add_form(fair_rules, fair)


def _all_small_sets(top: int, max_size: int) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []
    for mask in range(1, 1 << top):
        vals = tuple(i + 1 for i in range(top) if mask >> i & 1)
        if len(vals) <= max_size:
            out.append(vals)
    return sorted(out, key=lambda v: (len(v), v))


def _suite_constructions(rng: random.Random, ctx: VerifyContext, t: _Tally) -> None:
    for sl in _all_small_sets(8, 3):
        dom = construct_right_dominator(sl)
        form = detect_eventual_form(dom, 200_000)
        t.check(
            form.seq_class is SequenceClass.SD_RIGHT,
            f"dominator {dom}: class {form.seq_class}",
        )
        ctx.add_form(dom, form)
        fair, n = construct_right_fair(sl)
        bad = [k for k in range(1, 11) if outcome(fair, k * n).label != "R"]
        t.check(not bad, f"fair {fair} n={n}: label not R at multiples {bad}")
        spoiler, n0 = construct_left_spoiler(sl)
        bad = [k for k in range(1, 11) if outcome(spoiler, k * n0).oL != "R"]
        t.check(not bad, f"spoiler {spoiler} n0={n0}: oL not R at multiples {bad}")


def _suite_geometry(rng: random.Random, ctx: VerifyContext, t: _Tally) -> None:
    top = 200
    coords = np.arange(1, top + 1)
    gcd_grid = np.gcd.outer(coords, coords)
    max_grid = np.maximum.outer(coords, coords)
    for alpha in (Fraction(1), Fraction(3, 2), Fraction(2), Fraction(7, 3),
                  Fraction(3), Fraction(4), Fraction(9, 2), Fraction(6)):
        member = gcd_grid * alpha.numerator >= max_grid * alpha.denominator
        on_line = np.zeros_like(member)
        for line in t_lines(alpha):
            on_line |= np.equal.outer(coords * line.u, coords * line.v)
        mismatches = int(np.count_nonzero(member ^ on_line))
        t.checks += top * top - 1
        t.check(
            mismatches == 0,
            f"alpha={alpha}: {mismatches} points disagree between gcd law and lines",
        )
    for _ in range(500):
        u, v = rng.randint(1, 8), rng.randint(1, 8)
        a = rng.randint(1, 10)
        while True:
            x = rng.randint(1, 300)
            offsets = list(range(-a, a + 1))
            rng.shuffle(offsets)
            y = None
            for r in offsets:
                if (x * u - r) % v == 0 and (x * u - r) // v >= 1:
                    y = (x * u - r) // v
                    break
            if y is not None:
                break
        params = TSetParams(shift=0, alpha=Fraction(max(u, v)))
        dist = t_distance(x, y, params)
        t.check(
            dist <= a * (u + v),
            f"(x,y)=({x},{y}) near slope {u}/{v}: distance {dist} > {a * (u + v)}",
        )
        t.check(
            (dist == 0) == t_membership(x, y, params),
            f"(x,y)=({x},{y}) alpha={max(u, v)}: zero-distance/membership mismatch",
        )
    params = TSetParams(shift=0, alpha=Fraction(5, 2))
    for x in range(1, 61):
        for y in range(1, 61):
            t.check(
                (t_distance(x, y, params) == 0) == t_membership(x, y, params),
                f"({x},{y}) alpha=5/2: zero-distance/membership mismatch",
            )


def _suite_intervals(rng: random.Random, ctx: VerifyContext, t: _Tally) -> None:
    games = 0
    intrusions = 0
    while games < 100:
        a = rng.randint(1, 4)
        b = a + rng.randint(1, a + 2)
        slope_top = -(-a // (b - a)) + 1
        threshold = 2 * slope_top * (a + 2 * b)
        c = b + 1 + rng.randint(0, 30)
        d = slope_top * (c + b) + threshold + rng.randint(0, 200)
        report = two_vs_two_condition(a, b, c, d)
        if not report.holds:
            continue
        games += 1
        fam = interval_family(a, b, c, d)
        bad = interval_family_violations(fam)
        hard = [v for v in bad if not v.startswith("(ii-P)")]
        t.check(not hard, f"({a},{b},{c},{d}): {hard[:2]}")
        soft = [v for v in bad if v.startswith("(ii-P)")]
        intrusions += bool(soft)
        t.check(
            not soft or c < a + b,
            f"({a},{b},{c},{d}): guard-window P intrusion despite c >= a+b",
        )
        pred = interval_oracle(a, b, c, d)
        if not t.check(pred.applicable, f"({a},{b},{c},{d}): oracle declined ({pred.reason})"):
            continue
        rules = make_ruleset((a, b), (c, d))
        n_max = pred.form.preperiod_len + 50
        t.check(
            outcome_sequence(rules, n_max).word == pred.form.expand(n_max),
            f"{rules}: predicted labels disagree with engine",
        )
        form = detect_eventual_form(rules)
        t.check(form.seq_class is SequenceClass.SD_LEFT, f"{rules}: class {form.seq_class}")
        ctx.add_form(rules, form)
    t.detail = f"benign small-c guard intrusions: {intrusions}"


def _suite_maps(rng: random.Random, ctx: VerifyContext, t: _Tally) -> None:
    condition_true = 0
    for a, b in ((4, 11), (7, 9)):
        m = mapgen.domination_map(a, b, workers=ctx.workers)
        for c, d, cls in m.iter_cells():
            lo, hi = min(c, d), max(c, d)
            if lo == hi:
                continue
            if two_vs_two_condition(a, b, lo, hi).holds:
                condition_true += 1
                t.check(
                    cls is SequenceClass.SD_LEFT,
                    f"({a},{b}) cell ({c},{d}): condition holds but class {cls}",
                )
        again = mapgen.domination_map(a, b, workers=ctx.workers)
        for fmt in ("csv", "ppm"):
            t.check(
                mapgen.render_map(m, fmt) == mapgen.render_map(again, fmt),
                f"({a},{b}) {fmt} render not byte-deterministic",
            )
        cells = list(m.iter_cells())
        for c, d, cls in cells[:: max(1, len(cells) // 40)]:
            if cls is not None:
                ctx.add_form(
                    mapgen.cell_ruleset(a, b, c, d),
                    detect_eventual_form(mapgen.cell_ruleset(a, b, c, d)),
                )
        t.check(mapgen.summary(m)["unresolved"] == 0, f"({a},{b}): unresolved cells present")
    t.detail = f"condition-true cells: {condition_true}"


def _forbidden_period_pool(rng: random.Random) -> list[tuple[str, EventualForm]]:
    pool: list[tuple[str, EventualForm]] = []

    def add(rules: Ruleset) -> None:
        try:
            pool.append((str(rules), detect_eventual_form(rules)))
        except PeriodNotFound:
            pass

    add(make_ruleset((1, 2), (1, 3)))
    for b in range(2, 11):
        for a in range(1, b):
            add(make_ruleset((a,), (b,)))
            for c in range(1, 11):
                add(make_ruleset((a, b), (c,)))
    for d in range(6, 21):
        add(make_ruleset((2, 3), (1, d)))
    for _ in range(50):
        left = tuple(sorted(rng.sample(range(1, 13), rng.randint(1, 3))))
        right = tuple(sorted(rng.sample(range(1, 13), rng.randint(1, 3))))
        add(make_ruleset(left, right))
    return pool


def _suite_forbidden_period(rng: random.Random, ctx: VerifyContext, t: _Tally) -> None:
    forms = ctx.forms if ctx.forms else _forbidden_period_pool(rng)
    for label, form in forms:
        if form.seq_class is SequenceClass.UI:
            continue
        t.check(
            "N" in form.period if "P" in form.period else True,
            f"{label}: period {form.period} has P without N",
        )
    t.detail = f"{len(forms)} forms examined"


def _suite_self_check(rng: random.Random, ctx: VerifyContext, t: _Tally) -> None:
    sets = _all_small_sets(6, 6)
    for left in sets:
        for right in sets:
            rules = make_ruleset(left, right)
            word = outcome_sequence(rules, 40).word
            for n in range(41):
                t.check(
                    brute_force_outcome(rules, n).label == word[n],
                    f"{rules} n={n}: table and game-tree disagree",
                )
    for _ in range(200):
        left = tuple(sorted(rng.sample(range(1, 31), rng.randint(1, 4))))
        right = tuple(sorted(rng.sample(range(1, 31), rng.randint(1, 4))))
        rules = make_ruleset(left, right)
        form = detect_eventual_form(rules, 200_000)
        mirror = detect_eventual_form(conjugate(rules), 200_000)
        t.check(
            form.conjugate() == mirror,
            f"{rules}: conjugated form mismatch",
        )
        ctx.add_form(rules, form)


_SUITES: dict[str, tuple] = {
    "example": (_suite_example, 1),
    "one-vs-one": (_suite_one_vs_one, 2),
    "two-vs-one": (_suite_two_vs_one, 3),
    "far-regime": (_suite_far_regime, 4),
    "ones-to-k": (_suite_ones_to_k, 5),
    "frobenius-preperiod": (_suite_frobenius_preperiod, 6),
    "knapsack": (_suite_knapsack, 7),
    "stability": (_suite_stability, 8),
    "constructions": (_suite_constructions, 9),
    "geometry": (_suite_geometry, 10),
    "intervals": (_suite_intervals, 11),
    "maps": (_suite_maps, 12),
    "forbidden-period": (_suite_forbidden_period, 13),
    "self-check": (_suite_self_check, 14),
}

SUITE_NAMES = tuple(_SUITES)


def run_suite(
    name: str, seed: int = 0, ctx: VerifyContext | None = None, workers: int | None = None
) -> SuiteResult:
    """Run one named suite; a fresh context is used when none is shared."""
    if name not in _SUITES:
        raise ValueError(f"unknown suite {name!r}; expected one of {', '.join(_SUITES)}")
    if ctx is None:
        ctx = VerifyContext(workers=workers)
    func, criterion = _SUITES[name]
    tally = _Tally()
    start = time.perf_counter()
    func(_suite_rng(seed, name), ctx, tally)
    elapsed = time.perf_counter() - start
    return SuiteResult(
        name=name,
        criterion=criterion,
        passed=tally.failure_count == 0,
        checks=tally.checks,
        failure_count=tally.failure_count,
        failures=tuple(tally.failures),
        seconds=elapsed,
        detail=tally.detail,
    )


def run_all(seed: int = 0, workers: int | None = None) -> list[SuiteResult]:
    """Run every suite in criterion order with a shared form collector."""
    ctx = VerifyContext(workers=workers)
    return [run_suite(name, seed, ctx) for name in _SUITES]


def format_report(results: list[SuiteResult]) -> str:
    lines = [r.line() for r in results]
    failed = sum(not r.passed for r in results)
    checks = sum(r.checks for r in results)
    lines.append(
        f"{'OK' if failed == 0 else 'FAILED'}: "
        f"{len(results) - failed}/{len(results)} suites passed, {checks} checks"
    )
    return "\n".join(lines)
