"""Geometry of the exceptional set for two-vs-two move rulesets.

The exceptional set with entry threshold alpha collects the positive points
whose coordinates share a large common factor:

    (X, Y) belongs  iff  gcd(X, Y) >= max(X, Y) / alpha

evaluated exactly (alpha is a rational, never a float).  The set is the
union of finitely many primitive lines through the origin: the lines
X*u = Y*v over coprime pairs 1 <= u, v <= floor(alpha), whose integer points
are (k*v, k*u).  Distances are measured in the 1-norm; along one line the
distance to (X, Y) is piecewise linear in k, so the minimum sits at the
integer breakpoints near X/v and Y/u (or at k = 0).

A shift translates the whole set by (-shift, -shift): query points are moved
back into the positive quadrant before the law is applied.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


class OutOfQuadrant(ValueError):
    """Query point does not land in the positive quadrant after shifting."""


class DegenerateSlope(ValueError):
    """Move pair with b <= a has no exceptional-set condition."""


@dataclass(frozen=True)
class TSetParams:
    """Exceptional set parameters: integer shift >= 0 and exact rational alpha >= 1."""

    shift: int
    alpha: Fraction

    def __post_init__(self) -> None:
        if not isinstance(self.shift, int) or isinstance(self.shift, bool) or self.shift < 0:
            raise ValueError(f"shift must be an integer >= 0, got {self.shift!r}")
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        if self.alpha < 1:
            raise ValueError(f"alpha must be >= 1, got {self.alpha}")


def _shifted(x: int, y: int, params: TSetParams) -> tuple[int, int]:
    X, Y = x + params.shift, y + params.shift
    if X <= 0 or Y <= 0:
        raise OutOfQuadrant(
            f"({x}, {y}) shifted by {params.shift} leaves the positive quadrant"
        )
    return X, Y


def t_membership(x: int, y: int, params: TSetParams) -> bool:
    """Exact membership test via the gcd law."""
    X, Y = _shifted(x, y, params)
    alpha = params.alpha
    return math.gcd(X, Y) * alpha.numerator >= max(X, Y) * alpha.denominator


@dataclass(frozen=True)
class PrimitiveLine:
    """Line X*u = Y*v for a coprime positive pair; integer points are (k*v, k*u)."""

    u: int
    v: int

    def point_at(self, k: int) -> tuple[int, int]:
        return k * self.v, k * self.u

    def contains(self, X: int, Y: int) -> bool:
        return X * self.u == Y * self.v


def t_lines(alpha) -> tuple[PrimitiveLine, ...]:
    """All primitive lines of the unshifted set with the given threshold."""
    alpha = Fraction(alpha)
    if alpha < 1:
        raise ValueError(f"alpha must be >= 1, got {alpha}")
    bound = math.floor(alpha)
    return tuple(
        PrimitiveLine(u, v)
        for u in range(1, bound + 1)
        for v in range(1, bound + 1)
        if math.gcd(u, v) == 1
    )


def t_distance(x: int, y: int, params: TSetParams) -> int:
    """1-norm distance from (x, y) to the shifted exceptional set.

    Zero exactly when t_membership holds.  Minimized per line over k = 0 and
    the integer breakpoints of |X - k*v| + |Y - k*u| (padded by 2 for safety).
    """
    X, Y = _shifted(x, y, params)
    best = None
    for line in t_lines(params.alpha):
        u, v = line.u, line.v
        candidates = {0}
        for near in (X // v, -(-X // v), Y // u, -(-Y // u)):
            for pad in range(-2, 3):
                candidates.add(max(0, near + pad))
        here = min(abs(X - k * v) + abs(Y - k * u) for k in candidates)
        if best is None or here < best:
            best = here
    return best


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of the two-vs-two distance condition, with its ingredients."""

    holds: bool
    alpha: int
    threshold: int
    distance: int
    shift: int

    def __bool__(self) -> bool:
        return self.holds


def two_vs_two_condition(a: int, b: int, c: int, d: int, shift: int | None = None) -> ConditionReport:
    """Distance condition that forces ({a,b},{c,d}) to be eventually L.

    alpha = ceil(a/(b-a)) + 1, threshold = 2*alpha*(a+2b); the condition holds
    when (c, d) sits at 1-norm distance >= threshold from the exceptional set
    shifted by b.  The shift parameter is exposed so the alternative shift-by-a
    reading can be queried, but b is the default.
    """
    for name, value in (("a", a), ("b", b), ("c", c), ("d", d)):
        if value < 1:
            raise ValueError(f"{name} must be >= 1, got {value}")
    if b <= a:
        raise DegenerateSlope(f"need b > a, got a={a}, b={b}")
    alpha = -(-a // (b - a)) + 1
    threshold = 2 * alpha * (a + 2 * b)
    if shift is None:
        shift = b
    distance = t_distance(c, d, TSetParams(shift, Fraction(alpha)))
    return ConditionReport(distance >= threshold, alpha, threshold, distance, shift)
