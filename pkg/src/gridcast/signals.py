"""Signal arithmetic for broadcast towers on the grid.

A tower of strength t at T delivers max(t - dist(v, T), 0) signal to each
vertex v, so its reach is the Manhattan diamond of radius t-1 around it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.signal import convolve2d

from .lattice import BroadcastSpec, GridPoint, PatternParams, Window, manhattan_distance, pattern_row_xs


def sig(t: int, tower: GridPoint, v: GridPoint) -> int:
    """Signal v receives from a strength-t tower: max(t - dist, 0)."""
    if t < 1:
        raise ValueError(f"tower strength t must be >= 1, got {t}")
    return max(t - manhattan_distance(tower, v), 0)


def total_signal(spec: BroadcastSpec, params: PatternParams, v: GridPoint) -> int:
    """Sum of signal v receives from every tower of the lattice.

    Only towers with dist < t contribute, so the sum runs over rows
    y in [v.y - t + 1, v.y + t - 1] and, per row, the O(t/d + 1) towers
    inside the shrinking diamond cross-section.
    """
    t = spec.t
    total = 0
    for y in range(v.y - t + 1, v.y + t):
        budget = t - 1 - abs(y - v.y)
        for x in pattern_row_xs(params, y, v.x - budget, v.x + budget):
            total += t - abs(y - v.y) - abs(x - v.x)
    return total


def usable_signal(spec: BroadcastSpec) -> int:
    """Total per-tower signal after capping each vertex's share at r.

    Exactly 4k vertices sit at Manhattan distance k >= 1 from a tower,
    which collapses the sum over the whole grid to
    min(t,r) + sum_{k=1}^{t-1} 4k * min(t-k, r).
    """
    t, r = spec.t, spec.r
    return min(t, r) + sum(4 * k * min(t - k, r) for k in range(1, t))


@dataclass(frozen=True)
class DensityBound:
    """Search ceiling derived from the usable signal of one tower.

    delta_min = r / usable is a lower bound on the density of any (t,r)
    broadcast, so a period-d lattice can only work for d <= d_max.
    A d_max of 0 means no periodic lattice can ever supply enough signal.
    """

    usable: int
    delta_min: Fraction
    d_max: int


def density_bound(spec: BroadcastSpec) -> DensityBound:
    """Usable signal, the density lower bound r/usable, and d_max = usable // r."""
    usable = usable_signal(spec)
    return DensityBound(usable=usable, delta_min=Fraction(spec.r, usable), d_max=usable // spec.r)


def closed_form_density(t: int, r: int) -> Fraction:
    """Known optimal (t,r) broadcast density for r in {1, 2}.

    r=1: 1 / (2t^2 - 2t + 1) for all t >= 1.
    r=2: 1/3 for t = 2, otherwise 1 / (2(t-1)^2) for t > 2.

    Serves as an independent oracle for the search engine.
    """
    if t < 1:
        raise ValueError(f"tower strength t must be >= 1, got {t}")
    if r == 1:
        return Fraction(1, 2 * t * t - 2 * t + 1)
    if r == 2:
        if t < 2:
            raise ValueError("no closed form for r=2 with t < 2")
        if t == 2:
            return Fraction(1, 3)
        return Fraction(1, 2 * (t - 1) * (t - 1))
    raise ValueError(f"no closed form for r={r} (only r=1 and r=2 are known)")


def signal_field(spec: BroadcastSpec, params: PatternParams, w: Window) -> np.ndarray:
    """Total signal at every cell of w, as an int64 array indexed [y - y_min, x - x_min].

    Dense evaluation: a 0/1 tower indicator over w padded by the tower reach
    t-1 on all sides, convolved with the diamond kernel max(t - dist, 0).
    Exact integer arithmetic throughout.
    """
    t = spec.t
    pad = t - 1
    height = w.height + 2 * pad
    width = w.width + 2 * pad
    indicator = np.zeros((height, width), dtype=np.int64)
    for row in range(height):
        y = w.y_min - pad + row
        for x in pattern_row_xs(params, y, w.x_min - pad, w.x_max + pad):
            indicator[row, x - (w.x_min - pad)] = 1

    span = np.arange(-pad, pad + 1)
    dist = np.abs(span[:, None]) + np.abs(span[None, :])
    kernel = np.maximum(t - dist, 0).astype(np.int64)
    return convolve2d(indicator, kernel, mode="valid")
