"""Core vocabulary for partizan subtraction games on a single heap.

A game is given by two finite sets of positive integers: Left removes any
amount in ``left`` from the heap, Right any amount in ``right``, and a player
who cannot move loses.  Every position n therefore has two winners, one for
each choice of who moves first, and the pair is summarised by a label:

    L  Left wins no matter who starts
    R  Right wins no matter who starts
    N  the player who moves first wins
    P  the player who moves second wins

Outcome sequences of these games are ultimately periodic, so a game is fully
described by a finite preperiod word plus a repeating period word over the
alphabet P/N/L/R.  The period word alone determines how strongly one side
dominates the game; see SequenceClass.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, unique

LABELS = "PNLR"

# label <-> (winner when Left starts, winner when Right starts)
_PAIR_FROM_LABEL = {
    "P": ("R", "L"),
    "N": ("L", "R"),
    "L": ("L", "L"),
    "R": ("R", "R"),
}
_LABEL_FROM_PAIR = {pair: lab for lab, pair in _PAIR_FROM_LABEL.items()}


class EmptySet(ValueError):
    """A move set was empty."""


class NonPositiveMove(ValueError):
    """A move set contained an integer smaller than 1."""


class DuplicateMove(ValueError):
    """A move set listed the same amount twice; duplicates are not collapsed silently."""


@dataclass(frozen=True)
class Ruleset:
    """A game: Left's move amounts and Right's move amounts, sorted ascending.

    Construct through make_ruleset (or parse_ruleset), which validate input.
    """

    left: tuple[int, ...]
    right: tuple[int, ...]

    @property
    def max_move(self) -> int:
        return max(self.left[-1], self.right[-1])

    def __str__(self) -> str:
        return "%s/%s" % (
            ",".join(str(s) for s in self.left),
            ",".join(str(t) for t in self.right),
        )


def _clean_moves(moves, side: str) -> tuple[int, ...]:
    amounts = list(moves)
    if not amounts:
        raise EmptySet(f"{side} move set is empty")
    for value in amounts:
        if not isinstance(value, int) or isinstance(value, bool) or value < 1:
            raise NonPositiveMove(f"{side} move {value!r} is not a positive integer")
    if len(set(amounts)) != len(amounts):
        raise DuplicateMove(f"{side} move set {amounts} repeats an amount")
    return tuple(sorted(amounts))


def make_ruleset(left, right) -> Ruleset:
    """Build a validated Ruleset from two iterables of positive integers."""
    return Ruleset(_clean_moves(left, "left"), _clean_moves(right, "right"))


def parse_ruleset(text: str) -> Ruleset:
    """Parse the canonical textual form 'a,b/c,d' into a Ruleset."""
    halves = text.split("/")
    if len(halves) != 2:
        raise ValueError(f"ruleset {text!r} must look like 'a,b/c,d'")
    sides = []
    for half in halves:
        try:
            sides.append([int(part) for part in half.split(",")])
        except ValueError:
            raise ValueError(f"ruleset {text!r} has a non-integer move") from None
    return make_ruleset(*sides)


def conjugate(rules: Ruleset) -> Ruleset:
    """Swap the two players' move sets."""
    return Ruleset(rules.right, rules.left)


@dataclass(frozen=True)
class Outcome:
    """Winners of one position: oL when Left moves first, oR when Right moves first."""

    oL: str
    oR: str

    def __post_init__(self) -> None:
        if self.oL not in "LR" or self.oR not in "LR":
            raise ValueError(f"winners must be 'L' or 'R', got {(self.oL, self.oR)}")

    @property
    def label(self) -> str:
        return _LABEL_FROM_PAIR[(self.oL, self.oR)]

    @classmethod
    def from_label(cls, label: str) -> "Outcome":
        oL, oR = _PAIR_FROM_LABEL[label]
        return cls(oL, oR)


def conjugate_label(label: str) -> str:
    """Relabel an outcome after the players swap move sets: L and R trade, P and N stay."""
    return {"L": "R", "R": "L"}.get(label, label)


@unique
class SequenceClass(Enum):
    """How strongly the period word favours one player.

    SD (strongly dominated): every position in the period is won outright by
    one player.  WD (weakly dominated): one player wins some positions
    outright and the other none.  Fair: both players win positions outright.
    UI (uninfluenced): neither does, as in any impartial game.
    """

    SD_LEFT = "SD-Left"
    SD_RIGHT = "SD-Right"
    WD_LEFT = "WD-Left"
    WD_RIGHT = "WD-Right"
    FAIR = "Fair"
    UI = "UI"

    @classmethod
    def from_period(cls, period: str) -> "SequenceClass":
        if not period:
            raise ValueError("period word is empty")
        has_l = "L" in period
        has_r = "R" in period
        if has_l and has_r:
            return cls.FAIR
        if not has_l and not has_r:
            return cls.UI
        if has_l:
            return cls.SD_LEFT if period == "L" * len(period) else cls.WD_LEFT
        return cls.SD_RIGHT if period == "R" * len(period) else cls.WD_RIGHT

    def __str__(self) -> str:
        return self.value


def _check_word(word: str, name: str) -> None:
    bad = set(word) - set(LABELS)
    if bad:
        raise ValueError(f"{name} word {word!r} uses letters outside {LABELS}")


@dataclass(frozen=True)
class EventualForm:
    """Finite description of an ultimately periodic outcome sequence.

    Positions 0..len(preperiod)-1 carry the preperiod letters; afterwards the
    period word repeats forever.  Detection always returns the minimal form:
    the shortest period word, then the shortest preperiod consistent with it.
    """

    preperiod: str
    period: str

    def __post_init__(self) -> None:
        if not self.period:
            raise ValueError("period word is empty")
        _check_word(self.preperiod, "preperiod")
        _check_word(self.period, "period")

    @property
    def preperiod_len(self) -> int:
        return len(self.preperiod)

    @property
    def period_len(self) -> int:
        return len(self.period)

    @property
    def seq_class(self) -> SequenceClass:
        return SequenceClass.from_period(self.period)

    def label_at(self, n: int) -> str:
        if n < 0:
            raise ValueError("position must be >= 0")
        if n < len(self.preperiod):
            return self.preperiod[n]
        return self.period[(n - len(self.preperiod)) % len(self.period)]

    def expand(self, n_max: int) -> str:
        """The labels of positions 0..n_max as one word."""
        q, p = len(self.preperiod), len(self.period)
        if n_max < q:
            return self.preperiod[: n_max + 1]
        reps = (n_max + 1 - q + p - 1) // p
        return (self.preperiod + self.period * reps)[: n_max + 1]

    def conjugate(self) -> "EventualForm":
        swap = str.maketrans("LR", "RL")
        return EventualForm(self.preperiod.translate(swap), self.period.translate(swap))

    def is_minimal(self) -> bool:
        """True if no shorter period fits the tail and the preperiod cannot shrink."""
        p = len(self.period)
        for d in range(1, p):
            if p % d == 0 and self.period == self.period[d:] + self.period[:d]:
                return False
        return not self.preperiod or self.preperiod[-1] != self.period[-1]

    def agrees_eventually(self, other: "EventualForm") -> bool:
        """True if both forms describe the same infinite tail (preperiods may differ)."""
        import math

        start = max(len(self.preperiod), len(other.preperiod))
        span = math.lcm(len(self.period), len(other.period))
        return all(
            self.label_at(n) == other.label_at(n) for n in range(start, start + span)
        )

    def to_record(self) -> dict:
        return {
            "preperiod": self.preperiod,
            "period": self.period,
            "class": str(self.seq_class),
        }
