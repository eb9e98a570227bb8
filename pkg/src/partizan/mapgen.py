"""Class maps over a (c, d) parameter grid for games ({a,b}, {c,d}).

Each grid cell classifies one game; cells are independent, so generation can
fan out over processes, but cell order in the result is always (d, c)
row-major.  Cells whose period stays hidden below the cap are recorded as
None ("Unresolved") instead of failing the whole sweep.  Renderers emit CSV
or binary PPM (P6) with a fixed palette: SD-Left blue, SD-Right red, every
other class green, Unresolved black.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .core import Ruleset, SequenceClass, make_ruleset
from .engine import PeriodNotFound, detect_eventual_form

DEFAULT_CELL_CAP = 20_000
DEFAULT_GRID_SPAN = 120

UNRESOLVED = "Unresolved"


class UnknownFormat(ValueError):
    """render_map was asked for a format it does not speak."""


def _check_range(name: str, rng) -> tuple[int, int]:
    lo, hi = rng
    if not (isinstance(lo, int) and isinstance(hi, int)) or lo < 1 or hi < lo:
        raise ValueError(f"{name} must be an integer interval [lo, hi] with 1 <= lo <= hi")
    return lo, hi


@dataclass(frozen=True)
class DominationMap:
    """Classification grid: cells[di][ci] is the class of ({a,b},{c,d}).

    Rows follow d ascending from d_range[0], columns c ascending from
    c_range[0]; a None cell means the period was not found within cap.
    The right set is literally {c, d}, so diagonal cells are singleton
    games ({a,b},{c}).
    """

    a: int
    b: int
    c_range: tuple[int, int]
    d_range: tuple[int, int]
    cap: int
    cells: tuple[tuple[SequenceClass | None, ...], ...]

    @property
    def width(self) -> int:
        return self.c_range[1] - self.c_range[0] + 1

    @property
    def height(self) -> int:
        return self.d_range[1] - self.d_range[0] + 1

    def cell(self, c: int, d: int) -> SequenceClass | None:
        if not (self.c_range[0] <= c <= self.c_range[1] and self.d_range[0] <= d <= self.d_range[1]):
            raise ValueError(f"({c},{d}) outside the grid")
        return self.cells[d - self.d_range[0]][c - self.c_range[0]]

    def iter_cells(self):
        """Yield (c, d, class-or-None) in (d, c) row-major order."""
        for di, row in enumerate(self.cells):
            for ci, cls in enumerate(row):
                yield self.c_range[0] + ci, self.d_range[0] + di, cls


def cell_ruleset(a: int, b: int, c: int, d: int) -> Ruleset:
    return make_ruleset((a, b), {c, d})


def _classify_cell(task: tuple[int, int, int, int, int]) -> SequenceClass | None:
    a, b, c, d, cap = task
    try:
        return detect_eventual_form(cell_ruleset(a, b, c, d), cap).seq_class
    except PeriodNotFound:
        return None


def domination_map(
    a: int,
    b: int,
    c_range: tuple[int, int] | None = None,
    d_range: tuple[int, int] | None = None,
    cap: int = DEFAULT_CELL_CAP,
    workers: int | None = None,
) -> DominationMap:
    """Classify every (c, d) cell of the grid; default grid [b+1, b+120] squared.

    The game at (c, d) equals the game at (d, c), so only unordered pairs are
    evaluated and mirrored into both cells.  workers defaults to the CPU
    count; one worker runs everything in-process.
    """
    if not 0 < a < b:
        raise ValueError(f"need 0 < a < b, got a={a}, b={b}")
    c_lo, c_hi = _check_range("c_range", c_range if c_range is not None else (b + 1, b + DEFAULT_GRID_SPAN))
    d_lo, d_hi = _check_range("d_range", d_range if d_range is not None else (b + 1, b + DEFAULT_GRID_SPAN))
    pairs = sorted(
        {(min(c, d), max(c, d)) for d in range(d_lo, d_hi + 1) for c in range(c_lo, c_hi + 1)}
    )
    if workers is None:
        workers = os.cpu_count() or 1
    tasks = [(a, b, p, q, cap) for p, q in pairs]
    if workers <= 1 or len(tasks) < 4:
        classes = map(_classify_cell, tasks)
    else:
        pool = ProcessPoolExecutor(max_workers=workers)
        try:
            classes = pool.map(_classify_cell, tasks, chunksize=max(1, len(tasks) // (workers * 8)))
        finally:
            pool.shutdown(wait=False)
    by_pair = dict(zip(pairs, classes))
    cells = tuple(
        tuple(by_pair[(min(c, d), max(c, d))] for c in range(c_lo, c_hi + 1))
        for d in range(d_lo, d_hi + 1)
    )
    return DominationMap(a, b, (c_lo, c_hi), (d_lo, d_hi), cap, cells)


_PIXELS = {
    SequenceClass.SD_LEFT: bytes((0, 0, 255)),
    SequenceClass.SD_RIGHT: bytes((255, 0, 0)),
    None: bytes((0, 0, 0)),
}
_OTHER_PIXEL = bytes((0, 255, 0))


def render_map(m: DominationMap, format: str) -> bytes:
    """Serialize a map: "csv" rows of c,d,class or "ppm" binary P6 pixels.

    The PPM puts d increasing upward, so the first pixel row is the top
    d-row of the grid; CSV keeps (d, c) row-major cell order.
    """
    if format == "csv":
        lines = ["c,d,class"]
        for c, d, cls in m.iter_cells():
            lines.append(f"{c},{d},{UNRESOLVED if cls is None else cls}")
        return ("\n".join(lines) + "\n").encode("ascii")
    if format == "ppm":
        out = bytearray(f"P6\n{m.width} {m.height}\n255\n".encode("ascii"))
        for row in reversed(m.cells):
            for cls in row:
                out += _PIXELS.get(cls, _OTHER_PIXEL)
        return bytes(out)
    raise UnknownFormat(f"unknown render format {format!r}; expected 'csv' or 'ppm'")


def summary(m: DominationMap) -> dict:
    """Cell counts per class plus the unresolved tally, JSON-ready."""
    counts = {str(cls): 0 for cls in SequenceClass}
    unresolved = 0
    for _, _, cls in m.iter_cells():
        if cls is None:
            unresolved += 1
        else:
            counts[str(cls)] += 1
    return {"cells": m.width * m.height, "counts": counts, "unresolved": unresolved}
