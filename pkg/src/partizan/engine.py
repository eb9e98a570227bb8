"""Outcome computation for partizan subtraction games.

Positions are filled bottom-up.  With lw[n] = 1 iff Left moving first wins
position n and rw[n] = 1 iff Right moving first wins it, the recurrence is

    lw[n] = 1  iff  some s in left  has s <= n and rw[n-s] = 0
    rw[n] = 1  iff  some t in right has t <= n and lw[n-t] = 0

and a player with no legal move loses, so position 0 is always P.  Winner
flags and a 2-bit label code per position live in plain bytearrays, which
keeps multi-hundred-thousand-position sweeps compact and lets period
detection compare whole windows at C speed.

Ultimate periodicity: once every move is legal (n >= max move m), the label
at n is a function of the previous m labels, so equal m-letter windows at two
starts force equal continuations forever.  Detection therefore looks for an
earlier twin of the trailing m-window; at most 4^m + m positions can pass
without a repeat, and a configurable cap keeps the search bounded.  A missing
repeat raises PeriodNotFound rather than returning a guess.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import EventualForm, Outcome, Ruleset, SequenceClass

# label code = 2 * (Left wins moving first) + (Right wins moving first)
_CODE_CHARS = "PRLN"
_WORD_FROM_CODES = bytes.maketrans(bytes(range(4)), _CODE_CHARS.encode("ascii"))

DEFAULT_CAP_FLOOR = 10_000


class PeriodNotFound(RuntimeError):
    """No repeated outcome window showed up within the cap."""

    def __init__(self, cap: int, rules: Ruleset | None = None):
        self.cap = cap
        self.rules = rules
        suffix = f" for {rules}" if rules is not None else ""
        super().__init__(f"no repeated outcome window within {cap} positions{suffix}")


def default_cap(rules: Ruleset) -> int:
    """Detection budget used when the caller does not pass one."""
    m = rules.max_move
    return max(10 * m * m, DEFAULT_CAP_FLOOR)


def _extend(left, right, lw, rw, lab, upto: int) -> None:
    # Append positions len(lab)..upto-1 to the three parallel arrays.
    n = len(lab)
    lw_app, rw_app, lab_app = lw.append, rw.append, lab.append
    while n < upto:
        v = 0
        for s in left:
            if s > n:
                break
            if not rw[n - s]:
                v = 1
                break
        w = 0
        for t in right:
            if t > n:
                break
            if not lw[n - t]:
                w = 1
                break
        lw_app(v)
        rw_app(w)
        lab_app(2 * v + w)
        n += 1


def _fill(rules: Ruleset, count: int):
    lw, rw, lab = bytearray(), bytearray(), bytearray()
    _extend(rules.left, rules.right, lw, rw, lab, count)
    return lw, rw, lab


def outcome(rules: Ruleset, n: int) -> Outcome:
    """Winners of position n for either choice of first mover."""
    if n < 0:
        raise ValueError("position must be >= 0")
    lw, rw, _ = _fill(rules, n + 1)
    return Outcome("L" if lw[n] else "R", "R" if rw[n] else "L")


@dataclass(frozen=True)
class OutcomeSequence:
    """Labels of positions 0..n_max of one game, as one word over P/N/L/R."""

    rules: Ruleset
    word: str

    @property
    def n_max(self) -> int:
        return len(self.word) - 1

    def outcome_at(self, n: int) -> Outcome:
        return Outcome.from_label(self.word[n])


def outcome_sequence(rules: Ruleset, n_max: int) -> OutcomeSequence:
    """Labels of positions 0..n_max (inclusive)."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    _, _, lab = _fill(rules, n_max + 1)
    return OutcomeSequence(rules, bytes(lab).translate(_WORD_FROM_CODES).decode("ascii"))


def _minimized(head: bytes, start: int, period: int) -> EventualForm:
    # head is periodic with the given period from `start` on; shrink both parts.
    block = head[start : start + period]
    for d in range(1, period + 1):
        if period % d == 0 and block == block[d:] + block[:d]:
            period = d
            break
    q = start
    while q > 0 and head[q - 1] == head[q - 1 + period]:
        q -= 1
    pre = head[:q].translate(_WORD_FROM_CODES).decode("ascii")
    per = head[q : q + period].translate(_WORD_FROM_CODES).decode("ascii")
    return EventualForm(pre, per)


def detect_eventual_form(rules: Ruleset, cap: int | None = None) -> EventualForm:
    """Minimal preperiod word + minimal period word of the outcome sequence.

    Searches at doubling milestones for an earlier twin of the trailing
    max-move-wide label window; the first hit certifies periodicity and is
    then minimized (divisor scan for the period, walk-back for the preperiod).
    Raises PeriodNotFound if no window repeats within `cap` positions.
    """
    m = rules.max_move
    if cap is None:
        cap = default_cap(rules)
    if cap < 2 * m:
        raise ValueError(f"cap {cap} is below two windows of width {m}")
    left, right = rules.left, rules.right
    lw, rw, lab = bytearray(), bytearray(), bytearray()
    target = min(cap, max(4 * m, 64))
    while True:
        _extend(left, right, lw, rw, lab, target)
        n = len(lab)
        head = bytes(lab)
        twin = head.find(head[n - m :])
        if twin < n - m:
            return _minimized(head, twin, n - m - twin)
        if n >= cap:
            raise PeriodNotFound(cap, rules)
        target = min(cap, 2 * target)


def classify(rules: Ruleset, cap: int | None = None) -> SequenceClass:
    """Domination class of the game, read off the minimal period word."""
    return detect_eventual_form(rules, cap).seq_class


def winning_moves(rules: Ruleset, n: int, player: str) -> set[int]:
    """Move amounts for `player` ("left" or "right") moving first at n that win.

    A move wins exactly when the opponent, moving next from the smaller heap,
    loses.  Empty iff the position is lost for `player` moving first.
    """
    if n < 0:
        raise ValueError("position must be >= 0")
    lw, rw, _ = _fill(rules, n + 1)
    if player == "left":
        return {s for s in rules.left if s <= n and not rw[n - s]}
    if player == "right":
        return {t for t in rules.right if t <= n and not lw[n - t]}
    raise ValueError(f"player must be 'left' or 'right', got {player!r}")


def brute_force_outcome(rules: Ruleset, n: int) -> Outcome:
    """Winners of position n by plain game-tree search with a local memo.

    Deliberately independent of the sequence engine: top-down over (player to
    move, heap) states instead of the bottom-up double recurrence.  Intended
    as a cross-check for n up to a few hundred.
    """
    if n < 0:
        raise ValueError("position must be >= 0")
    moves = {"L": rules.left, "R": rules.right}
    other = {"L": "R", "R": "L"}
    memo: dict[tuple[str, int], bool] = {}

    def wins(player: str, heap: int) -> bool:
        key = (player, heap)
        if key not in memo:
            memo[key] = any(
                not wins(other[player], heap - take)
                for take in moves[player]
                if take <= heap
            )
        return memo[key]

    return Outcome("L" if wins("L", n) else "R", "R" if wins("R", n) else "L")
