"""Closed-form predictions for families of partizan subtraction games.

Each oracle knows one proved result: given parameters it either predicts the
game's behaviour (full sequence, eventual form, or class alone) or declines
with a machine-readable reason naming the failed hypothesis.  Predictions are
always returned in-band so parameter sweeps can stratify on the reason code
instead of catching exceptions.  Oracles never consult the engine for the
predicted family itself; the engine is the thing they are checked against.

perstay_check is the one exception to engine independence by design: its
hypothesis is about the measured preperiod of the *base* game, which it reads
off the engine before predicting the grown game ({...}, {... + d}).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum, unique

from .core import EventualForm, Ruleset, SequenceClass, make_ruleset
from .engine import detect_eventual_form
from .geometry import two_vs_two_condition


class SizeMismatch(ValueError):
    """oracle_ones_to_k was given a right set whose size is not k."""


@unique
class PredictionKind(Enum):
    FULL_SEQUENCE = "full-sequence"    # form is exact from position 0
    EVENTUAL_FORM = "eventual-form"    # form's period and alignment hold from some point on
    CLASS_ONLY = "class-only"
    POSITION_FAMILY = "position-family"


@dataclass(frozen=True)
class Prediction:
    """What one theorem says about one game, or why it says nothing.

    applicable=False carries a stable reason code and no payload.  For form
    kinds, label_at(n) of the payload uses absolute alignment: position n maps
    to period[(n - preperiod_len) % period_len]; EVENTUAL_FORM promises that
    only for all large n, FULL_SEQUENCE for every n.
    """

    theorem: str
    kind: PredictionKind
    applicable: bool
    reason: str = ""
    form: EventualForm | None = None
    seq_class: SequenceClass | None = None
    preperiod_bound: int | None = None

    def __post_init__(self) -> None:
        if self.applicable:
            if self.reason:
                raise ValueError("applicable prediction must not carry a reason")
            if self.form is None and self.seq_class is None:
                raise ValueError("applicable prediction needs a payload")
        else:
            if not self.reason:
                raise ValueError("inapplicable prediction must name the failed hypothesis")
            if self.form is not None or self.seq_class is not None:
                raise ValueError("inapplicable prediction must not carry a payload")

    def to_record(self) -> dict:
        record = {
            "theorem": self.theorem,
            "kind": self.kind.value,
            "applicable": self.applicable,
            "reason": self.reason,
        }
        if self.form is not None:
            record.update(self.form.to_record())
        elif self.seq_class is not None:
            record["class"] = str(self.seq_class)
        if self.preperiod_bound is not None:
            record["preperiod_bound"] = self.preperiod_bound
        return record


def _declined(theorem: str, kind: PredictionKind, reason: str) -> Prediction:
    return Prediction(theorem, kind, False, reason)


def _form_prediction(theorem: str, kind: PredictionKind, form: EventualForm) -> Prediction:
    return Prediction(theorem, kind, True, form=form, seq_class=form.seq_class)


def oracle_one_vs_one(a: int, b: int) -> Prediction:
    """({a},{b}) with a < b: purely periodic P^a L^(b-a) N^a."""
    if not 0 < a < b:
        return _declined("one-vs-one", PredictionKind.FULL_SEQUENCE, "requires 0 < a < b")
    word = "P" * a + "L" * (b - a) + "N" * a
    return _form_prediction("one-vs-one", PredictionKind.FULL_SEQUENCE, EventualForm("", word))


def oracle_two_vs_one(a: int, b: int, c: int) -> Prediction:
    """({a,b},{c}) with a < b, classified by g = gcd(a+c, b+c).

    g <= c: eventually L.  Otherwise the tail is periodic with period g,
    aligned to n mod g: P on residues below g-c, N on residues from c up, and
    L (g < 2c) or R (g > 2c) in between; g = 2c leaves an impartial-looking
    P^c N^c period.
    """
    if not 0 < a < b:
        return _declined("two-vs-one", PredictionKind.EVENTUAL_FORM, "requires 0 < a < b")
    if c < 1:
        return _declined("two-vs-one", PredictionKind.EVENTUAL_FORM, "requires c >= 1")
    g = math.gcd(a + c, b + c)
    if g <= c:
        return Prediction(
            "two-vs-one", PredictionKind.CLASS_ONLY, True, seq_class=SequenceClass.SD_LEFT
        )
    if g < 2 * c:
        word = "P" * (g - c) + "L" * (2 * c - g) + "N" * (g - c)
    elif g == 2 * c:
        word = "P" * c + "N" * c
    else:
        word = "P" * c + "R" * (g - 2 * c) + "N" * c
    return _form_prediction("two-vs-one", PredictionKind.EVENTUAL_FORM, EventualForm("", word))


def oracle_full_sequence_far(a: int, b: int, c: int, d: int | None = None) -> Prediction:
    """({a,b},{c}) or ({a,b},{c,d}) with b >= 2a and c (and d) far out: exact sequence.

    P^a L^(c-a) N^a then all L; a second Right move d > c+b repeats the
    N-block at d before the final all-L tail.
    """
    kind = PredictionKind.FULL_SEQUENCE
    if not 0 < a or not b >= 2 * a:
        return _declined("far-regime", kind, "requires b >= 2a")
    if not c > b:
        return _declined("far-regime", kind, "requires c > b")
    if d is None:
        word = "P" * a + "L" * (c - a) + "N" * a
    else:
        if not d > c + b:
            return _declined("far-regime", kind, "requires d > c+b")
        word = "P" * a + "L" * (c - a) + "N" * a + "L" * (d - c - a) + "N" * a
    return _form_prediction("far-regime", kind, EventualForm(word, "L"))


def oracle_ones_to_k(k: int, right) -> Prediction:
    """({1..k}, right) for a size-k right set.

    Consecutive right sets {c+1..c+k} are purely periodic P L^c N^k (the c=0
    case is the impartial game, class UI); any other size-k right set leaves
    the game eventually L.
    """
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise ValueError(f"k must be an integer >= 1, got {k!r}")
    moves = make_ruleset(right, right).left  # validated, sorted
    if len(moves) != k:
        raise SizeMismatch(f"right set {moves} has size {len(moves)}, expected k={k}")
    lo = moves[0]
    if moves == tuple(range(lo, lo + k)):
        c = lo - 1
        if c == 0:
            return Prediction(
                "ones-to-k", PredictionKind.CLASS_ONLY, True, seq_class=SequenceClass.UI
            )
        word = "P" + "L" * c + "N" * k
        return _form_prediction("ones-to-k", PredictionKind.FULL_SEQUENCE, EventualForm("", word))
    return Prediction(
        "ones-to-k", PredictionKind.CLASS_ONLY, True, seq_class=SequenceClass.SD_LEFT
    )


def perstay_check(base: Ruleset, d: int, cap: int | None = None) -> Prediction:
    """Does adding move d to Right's set keep an eventually-L game eventually L?

    Measures the base game with the engine: needs two Left moves x1 < x2, an
    eventually-L base with last non-L position p, and d > p + max(right moves
    and x2-x1).  Predicts the grown game ({left}, {right + d}) stays
    eventually L with preperiod at most (d+x2)*ceil((d+x2)/(x2-x1)); all
    qualifying Left pairs are tried and the smallest bound is reported.
    """
    kind = PredictionKind.CLASS_ONLY
    if len(base.left) < 2:
        return _declined("stability", kind, "needs two left moves")
    form = detect_eventual_form(base, cap)
    if form.seq_class is not SequenceClass.SD_LEFT:
        return _declined("stability", kind, "base not eventually L")
    p = form.preperiod_len - 1
    right_max = base.right[-1]
    best = None
    need = None
    for hi_idx in range(1, len(base.left)):
        for lo_idx in range(hi_idx):
            x1, x2 = base.left[lo_idx], base.left[hi_idx]
            threshold = p + max(right_max, x2 - x1)
            need = threshold if need is None else min(need, threshold)
            if d > threshold:
                bound = (d + x2) * (-(-(d + x2) // (x2 - x1)))
                key = (bound, x2, x1)
                if best is None or key < best:
                    best = key
    if best is None:
        return _declined("stability", kind, f"d too small: need d > {need}")
    return Prediction(
        "stability",
        kind,
        True,
        seq_class=SequenceClass.SD_LEFT,
        preperiod_bound=best[0],
    )


def construct_right_dominator(sl, cap: int | None = None) -> Ruleset:
    """Grow sl into a game Right dominates: right set = sl plus the impartial period.

    The period length p of the impartial game (sl, sl) is never itself in sl
    (a P-position minus p would stay P), and handing Right that extra move
    lets Right always fall back to a P-position: class SD-Right.
    """
    base = make_ruleset(sl, sl)
    p = detect_eventual_form(base, cap).period_len
    return make_ruleset(base.left, set(base.left) | {p})


def construct_right_fair(sl) -> tuple[Ruleset, int]:
    """Smallest n making right set {n - m for m in sl} + {n} disjoint from sl.

    In the resulting game Right wins every multiple of n outright (label R at
    k*n for k >= 1), so the game is not eventually L.
    """
    left = make_ruleset(sl, sl).left
    n = left[-1] + 1
    while True:
        mirrored = {n - m for m in left}
        if not mirrored & set(left):
            return make_ruleset(left, mirrored | {n}), n
        n += 1


def construct_left_spoiler(sl) -> tuple[Ruleset, int]:
    """Smallest n0 > max(sl) with {n0 - m for m in sl} disjoint from sl.

    With right set n0 - sl, Right moving second wins every multiple of n0:
    oL(k*n0) = R for all k, so the game never becomes eventually L.
    """
    left = make_ruleset(sl, sl).left
    n0 = left[-1] + 1
    while True:
        mirrored = {n0 - m for m in left}
        if not mirrored & set(left):
            return make_ruleset(left, mirrored), n0
        n0 += 1


@dataclass(frozen=True)
class IntervalFamily:
    """The doubly indexed P/N interval grid of a far two-vs-two game.

    Index (i, j) counts Right moves of size d and c.  With step = b - a:
    the P interval starts at i*(d+b) + j*(c+b) with length a - (i+j)*step,
    and the N interval sits b positions earlier with one step more length.
    Intervals of non-positive length are absent; the (0,0) N interval is
    real but lives entirely on negative positions.
    """

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self) -> None:
        if not (1 <= self.a < self.b < self.c < self.d):
            raise ValueError(
                f"need 1 <= a < b < c < d, got {(self.a, self.b, self.c, self.d)}"
            )

    @property
    def index_ceiling(self) -> int:
        """Largest i+j that can still carry a nonempty N interval."""
        return -(-self.a // (self.b - self.a))

    def p_interval(self, i: int, j: int) -> tuple[int, int] | None:
        start = i * (self.d + self.b) + j * (self.c + self.b)
        length = self.a - (i + j) * (self.b - self.a)
        return (start, start + length) if length > 0 else None

    def n_interval(self, i: int, j: int) -> tuple[int, int] | None:
        start = i * (self.d + self.b) + j * (self.c + self.b) - self.b
        length = self.a - (i + j - 1) * (self.b - self.a)
        return (start, start + length) if length > 0 else None

    def _nonempty(self, which) -> list[tuple[tuple[int, int], tuple[int, int]]]:
        out = []
        top = self.index_ceiling
        for i in range(top + 1):
            for j in range(top + 1 - i):
                span = which(i, j)
                if span is not None:
                    out.append(((i, j), span))
        return out

    @property
    def p_intervals(self):
        return self._nonempty(self.p_interval)

    @property
    def n_intervals(self):
        return self._nonempty(self.n_interval)

    def label_at(self, n: int) -> str:
        if n < 0:
            raise ValueError("position must be >= 0")
        for _, (lo, hi) in self.p_intervals:
            if lo <= n < hi:
                return "P"
        for _, (lo, hi) in self.n_intervals:
            if lo <= n < hi:
                return "N"
        return "L"

    def expand(self, n_max: int) -> str:
        word = bytearray(b"L" * (n_max + 1))
        for kind, spans in ((b"N", self.n_intervals), (b"P", self.p_intervals)):
            for _, (lo, hi) in spans:
                for n in range(max(lo, 0), min(hi, n_max + 1)):
                    word[n : n + 1] = kind
        return word.decode("ascii")

    def to_eventual_form(self) -> EventualForm:
        last = max(hi for _, (_, hi) in self.p_intervals + self.n_intervals)
        return EventualForm(self.expand(last - 1), "L")


def interval_family(a: int, b: int, c: int, d: int) -> IntervalFamily:
    """Instantiate the interval grid; see IntervalFamily."""
    return IntervalFamily(a, b, c, d)


def _intersect(s1: tuple[int, int] | None, s2: tuple[int, int] | None):
    if s1 is None or s2 is None:
        return None
    lo, hi = max(s1[0], s2[0]), min(s1[1], s2[1])
    return (lo, hi) if lo < hi else None


def _shift(span: tuple[int, int] | None, by: int):
    return None if span is None else (span[0] + by, span[1] + by)


def interval_family_violations(fam: IntervalFamily) -> list[str]:
    """Check the five structural interval properties; empty list means all hold.

    (i) all intervals are pairwise disjoint; (ii) the b positions before any
    N interval meet no interval; (iii) P(i,j) + c = N(i,j+1); (iv) P(i,j) + d
    = N(i+1,j); (v) (N(i,j) + a) meet (N(i,j) + b) = P(i,j).

    Violations of (ii) are tagged "(ii-N)" or "(ii-P)" by the intruder's kind.
    Even when the distance condition holds, a P interval can sit inside the
    guard window whenever c < a+b (the window behind N(i,j+1) reaches back to
    a(i,j) + c - b < a(i,j) + a and can touch P(i,j)); that never perturbs
    the predicted labels, since a Left move landing on a P position wins just
    like one landing on an L position.  (ii-N) and the other four properties
    cannot fail while the distance condition holds.
    """
    bad: list[str] = []
    tagged = [("P", key, span) for key, span in fam.p_intervals] + [
        ("N", key, span) for key, span in fam.n_intervals
    ]
    ordered = sorted(tagged, key=lambda t: t[2])
    for (k1, i1, s1), (k2, i2, s2) in zip(ordered, ordered[1:]):
        if s2[0] < s1[1]:
            bad.append(f"(i) {k1}{i1}={s1} overlaps {k2}{i2}={s2}")
    for key, (lo, hi) in fam.n_intervals:
        guard = (lo - fam.b, lo)
        for k2, i2, s2 in tagged:
            if _intersect(guard, s2):
                bad.append(f"(ii-{k2}) {k2}{i2}={s2} intrudes on the {fam.b} positions before N{key}")
    top = fam.index_ceiling + 1
    for i in range(top + 1):
        for j in range(top + 1 - i):
            if _shift(fam.p_interval(i, j), fam.c) != fam.n_interval(i, j + 1):
                bad.append(f"(iii) P({i},{j}) + c != N({i},{j + 1})")
            if _shift(fam.p_interval(i, j), fam.d) != fam.n_interval(i + 1, j):
                bad.append(f"(iv) P({i},{j}) + d != N({i + 1},{j})")
            ni = fam.n_interval(i, j)
            meet = _intersect(_shift(ni, fam.a), _shift(ni, fam.b))
            if meet != fam.p_interval(i, j):
                bad.append(f"(v) shifted N({i},{j}) meet != P({i},{j})")
    return bad


def interval_oracle(a: int, b: int, c: int, d: int) -> Prediction:
    """Exact sequence of ({a,b},{c,d}) when (c,d) clears the distance condition.

    Labels: P on the P intervals, N on the N intervals, L everywhere else;
    eventually all L, so the game is SD-Left.
    """
    kind = PredictionKind.FULL_SEQUENCE
    if not 1 <= a < b < c < d:
        return _declined("interval", kind, "requires a < b < c < d")
    report = two_vs_two_condition(a, b, c, d)
    if not report.holds:
        return _declined(
            "interval",
            kind,
            f"condition failed: distance {report.distance} < {report.threshold}",
        )
    return _form_prediction("interval", kind, interval_family(a, b, c, d).to_eventual_form())
