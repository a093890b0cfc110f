"""Decide whether the lattice T(d,e) is a (t,r) broadcast.

Every vertex of the grid is a lattice translate of one of the d row-0
representatives (0,0) .. (d-1,0), and translating a vertex by a lattice
vector carries the whole tower set onto itself.  So T(d,e) is a (t,r)
broadcast exactly when all d representatives receive total signal >= r.

The fast path evaluates all d representative totals at once from per-row
signal profiles; a dense brute-force check over a large box is kept as an
independent oracle for the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .lattice import BroadcastSpec, GridPoint, PatternParams, Window
from .signals import signal_field


@dataclass(frozen=True)
class FeasibilityRecord:
    """Feasibility verdict plus the signal total of each representative."""

    spec: BroadcastSpec
    params: PatternParams
    feasible: bool
    row_totals: tuple[tuple[GridPoint, int], ...]

    def deficits(self) -> tuple[tuple[GridPoint, int], ...]:
        """Representatives whose total falls short of r."""
        return tuple((v, s) for v, s in self.row_totals if s < self.spec.r)


def _geometric_signal_sum(c: np.ndarray, d: int) -> np.ndarray:
    """Elementwise sum_{j>=0} max(c - j*d, 0) for the arithmetic series of tower gaps."""
    c = np.maximum(c, 0)
    q = (c - 1) // d  # index of the last positive term; -1 when c == 0
    return (q + 1) * c - d * (q * (q + 1)) // 2


@lru_cache(maxsize=128)
def _row_profiles(t: int, d: int) -> np.ndarray:
    """Signal a vertex gets from one tower row, by row budget and residue.

    Entry [s, m] is the total signal from an infinite row of towers with
    horizontal period d whose nearest tower to the left of (or at) the
    vertex is m columns away, when signal fades to zero s+1 columns out.
    The towers at offsets m, m+d, ... and d-m, 2d-m, ... each contribute
    max(s + 1 - offset, 0).
    """
    m = np.arange(d, dtype=np.int64)
    profiles = np.empty((t, d), dtype=np.int64)
    for s in range(t):
        profiles[s] = _geometric_signal_sum(s + 1 - m, d) + _geometric_signal_sum(s + 1 - (d - m), d)
    profiles.setflags(write=False)
    return profiles


def representative_totals(spec: BroadcastSpec, params: PatternParams) -> np.ndarray:
    """Total signal at each of the d representatives (i, 0), as int64[d].

    Accumulates one profile per tower row y in [-(t-1), t-1]: row y has
    budget s = t-1-|y| and its towers sit at residue e*y (mod d), which
    shifts the profile by e*y columns.
    """
    t, d, e = spec.t, params.d, params.e
    profiles = _row_profiles(t, d)
    ys = np.arange(-(t - 1), t, dtype=np.int64)
    budgets = (t - 1) - np.abs(ys)
    shifted = (np.arange(d, dtype=np.int64)[None, :] - (e * ys)[:, None]) % d
    return np.take_along_axis(profiles[budgets], shifted, axis=1).sum(axis=0)


def is_standard_broadcast(spec: BroadcastSpec, params: PatternParams) -> bool:
    """True iff every representative of T(d,e) receives total signal >= r."""
    return bool(representative_totals(spec, params).min() >= spec.r)


def deficit_report(spec: BroadcastSpec, params: PatternParams) -> FeasibilityRecord:
    """Full per-representative diagnostic record for T(d,e) under (t,r)."""
    totals = representative_totals(spec, params)
    row_totals = tuple((GridPoint(i, 0), int(totals[i])) for i in range(params.d))
    return FeasibilityRecord(
        spec=spec,
        params=params,
        feasible=bool(totals.min() >= spec.r),
        row_totals=row_totals,
    )


def brute_force_check(spec: BroadcastSpec, params: PatternParams, extent: int) -> bool:
    """Oracle: is total signal >= r at every vertex with |x|, |y| <= extent?

    Evaluates the dense signal field over the box directly, with no appeal
    to translation symmetry.  Test-suite counterpart of is_standard_broadcast.
    """
    if extent < 1:
        raise ValueError(f"extent must be >= 1, got {extent}")
    field = signal_field(spec, params, Window(-extent, extent, -extent, extent))
    return bool((field >= spec.r).all())


def default_oracle_extent(spec: BroadcastSpec, params: PatternParams) -> int:
    """Box half-width 3(t+d): several full lattice periods with margin."""
    return 3 * (spec.t + params.d)
