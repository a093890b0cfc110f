"""Geometry of the infinite grid and the periodic tower lattices p(d,e).

The lattice p(d,e) = {(d*x + e*y, y) : x, y integers} places one tower in
every d consecutive columns of each row, shifting the towers of row y+1
by e columns relative to row y.  Its density is exactly 1/d.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, NamedTuple


class GridPoint(NamedTuple):
    """An integer coordinate pair (x, y) on the grid Z x Z."""

    x: int
    y: int

    def translate(self, dx: int, dy: int) -> "GridPoint":
        return GridPoint(self.x + dx, self.y + dy)


ORIGIN = GridPoint(0, 0)


def manhattan_distance(p: GridPoint, q: GridPoint) -> int:
    """Length of a shortest grid path between p and q: |dx| + |dy|."""
    return abs(p.x - q.x) + abs(p.y - q.y)


@dataclass(frozen=True)
class PatternParams:
    """Canonical name (d, e) of a tower lattice with period d and row shift e.

    The offset is stored canonically in [0, d); any integer offset passed to
    the constructor is reduced modulo d, which renames the same point set.
    """

    d: int
    e: int

    def __post_init__(self) -> None:
        if self.d < 1:
            raise ValueError(f"period d must be >= 1, got {self.d}")
        object.__setattr__(self, "e", self.e % self.d)

    @property
    def density(self) -> Fraction:
        """Fraction of grid vertices that are towers: 1/d."""
        return Fraction(1, self.d)

    def contains(self, v: GridPoint) -> bool:
        """True iff v is a tower, i.e. v.x - e*v.y is divisible by d."""
        return (v.x - self.e * v.y) % self.d == 0

    def reflect(self) -> "PatternParams":
        """Mirror image under x -> -x: the lattice (d, (d - e) mod d)."""
        return PatternParams(self.d, (self.d - self.e) % self.d)


@dataclass(frozen=True)
class BroadcastSpec:
    """Tower strength t and required signal r, both positive."""

    t: int
    r: int

    def __post_init__(self) -> None:
        if self.t < 1:
            raise ValueError(f"tower strength t must be >= 1, got {self.t}")
        if self.r < 1:
            raise ValueError(f"required signal r must be >= 1, got {self.r}")


@dataclass(frozen=True)
class Window:
    """Inclusive bounding box of grid cells."""

    x_min: int
    x_max: int
    y_min: int
    y_max: int

    def __post_init__(self) -> None:
        if self.x_min > self.x_max or self.y_min > self.y_max:
            raise ValueError(f"degenerate window {self}")

    @property
    def width(self) -> int:
        return self.x_max - self.x_min + 1

    @property
    def height(self) -> int:
        return self.y_max - self.y_min + 1

    @property
    def cell_count(self) -> int:
        return self.width * self.height

    def cells(self) -> Iterator[GridPoint]:
        """All cells in row-major order (y ascending, then x ascending)."""
        for y in range(self.y_min, self.y_max + 1):
            for x in range(self.x_min, self.x_max + 1):
                yield GridPoint(x, y)


def canonicalize(d: int, e: int) -> PatternParams:
    """Normalize an arbitrary integer offset into the canonical name (d, e mod d)."""
    if d < 1:
        raise ValueError(f"period d must be >= 1, got {d}")
    return PatternParams(d, e % d)


def pattern_row_xs(params: PatternParams, y: int, x_min: int, x_max: int) -> range:
    """Column positions of row-y towers inside [x_min, x_max], as a range.

    Row y holds towers at every x with x = e*y (mod d); the result is that
    arithmetic progression clipped to the interval, computed in closed form.
    """
    first = x_min + (params.e * y - x_min) % params.d
    return range(first, x_max + 1, params.d)


def towers_in_window(params: PatternParams, w: Window) -> list[GridPoint]:
    """All towers of the lattice inside w, in row-major order."""
    return [
        GridPoint(x, y)
        for y in range(w.y_min, w.y_max + 1)
        for x in pattern_row_xs(params, y, w.x_min, w.x_max)
    ]


def row_representatives(d: int) -> list[GridPoint]:
    """The d vertices (0,0) .. (d-1,0) whose signal totals decide feasibility."""
    if d < 1:
        raise ValueError(f"period d must be >= 1, got {d}")
    return [GridPoint(i, 0) for i in range(d)]
