"""Coin representability, Frobenius numbers, and the knapsack-to-game bridge.

A coin set is a finite set of integers >= 2.  n is representable if it is a
sum of coins with repetition (0 counts, as the empty sum).  When the coins
have gcd 1 all large n are representable and the largest exception is the
Frobenius number; for two coprime coins a, b it is a*b - a - b.

The bridge: give Left the single move 1 and Right the moves {x - 1 for x in
s}.  Then Left moving first loses position n exactly when n is representable
from s, so the game engine doubles as an independent representability check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import Ruleset, make_ruleset


class GcdNotOne(ValueError):
    """Frobenius number requested for coins whose gcd exceeds 1."""


class ContainsOne(ValueError):
    """Coin value 1 is rejected: it makes everything representable and breaks the game bridge."""


@dataclass(frozen=True)
class CoinSet:
    """Distinct coin values >= 2, stored sorted ascending."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        values = tuple(self.values)
        if not values:
            raise ValueError("coin set is empty")
        for v in values:
            if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                raise ValueError(f"coin value {v!r} is not a positive integer")
            if v == 1:
                raise ContainsOne("coin value 1 is not allowed")
        if len(set(values)) != len(values):
            raise ValueError(f"coin set {values} repeats a value")
        object.__setattr__(self, "values", tuple(sorted(values)))

    @property
    def gcd_value(self) -> int:
        return math.gcd(*self.values)

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.values)


def _reach(values: tuple[int, ...], limit: int) -> bytearray:
    # reach[i] = 1 iff i is a sum of values with repetition
    reach = bytearray(limit + 1)
    reach[0] = 1
    for i in range(values[0], limit + 1):
        for x in values:
            if x > i:
                break
            if reach[i - x]:
                reach[i] = 1
                break
    return reach


def representable(s: CoinSet, n: int) -> bool:
    """True if n is a sum of coins from s, repetition allowed (0 is)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return bool(_reach(s.values, n)[n])


def frobenius(s: CoinSet) -> int:
    """Largest non-representable integer of a gcd-1 coin set.

    Two coins use the closed form a*b - a - b; otherwise a representability
    table up to min*max is scanned downward (every gap lies below min*max:
    each residue class mod min has a representative using at most min-1
    coins, each at most max).
    """
    if s.gcd_value != 1:
        raise GcdNotOne(f"gcd of {s} is {s.gcd_value}, need 1")
    values = s.values
    if len(values) == 2:
        a, b = values
        return a * b - a - b
    limit = values[0] * values[-1]
    reach = _reach(values, limit)
    for i in range(limit, -1, -1):
        if not reach[i]:
            return i
    raise AssertionError("unreachable: 1 is never representable")


def knapsack_to_game(s: CoinSet, n: int) -> tuple[Ruleset, int]:
    """Recast representability as a game position.

    Returns game ({1}, {x-1 for x in s}) with position n; Left moving first
    loses (oL = R) exactly when n is representable from s.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    return make_ruleset((1,), [x - 1 for x in s.values]), n
