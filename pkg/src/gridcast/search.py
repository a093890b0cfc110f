"""Exhaustive search for the sparsest broadcast lattice at a given (t,r).

Scans periods d from the bound d_max downward and, at each d, all offsets
e in [0, d).  The first d with a feasible offset is the best: a feasible
pair at period d has density 1/d, so larger feasible periods always win
and ties between offsets are broken by the smallest e.  Feasibility is
not assumed monotone in d, so every period down to the winner is examined.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .feasibility import is_standard_broadcast
from .lattice import BroadcastSpec, PatternParams
from .signals import density_bound


@dataclass(frozen=True)
class SearchResult:
    """Best lattice found for one (t,r), or the infeasible marker best_d == 0."""

    spec: BroadcastSpec
    best_d: int
    best_e: int | None
    density: Fraction | None
    witnesses: tuple[int, ...]

    @property
    def feasible(self) -> bool:
        return self.best_d > 0

    def pattern(self) -> PatternParams | None:
        if not self.feasible:
            return None
        assert self.best_e is not None
        return PatternParams(self.best_d, self.best_e)


class ConjectureVerdict(str, Enum):
    """Outcome of comparing best densities at (t,r) and (t+1, r+2)."""

    EQUAL = "equal"
    LIFTED_DENSER = "counterexample-lifted-denser"
    LIFTED_SPARSER = "counterexample-lifted-sparser"
    INCOMPARABLE = "incomparable"

    @property
    def is_counterexample(self) -> bool:
        return self in (ConjectureVerdict.LIFTED_DENSER, ConjectureVerdict.LIFTED_SPARSER)


@dataclass(frozen=True)
class ConjectureComparison:
    base: BroadcastSpec
    lifted: BroadcastSpec
    base_density: Fraction | None
    lifted_density: Fraction | None
    verdict: ConjectureVerdict


def min_density_search(spec: BroadcastSpec) -> SearchResult:
    """Largest feasible period d <= d_max with all its feasible offsets.

    Equivalent to an ascending scan over d that keeps the last feasible
    period; descending lets the scan stop at the first hit.  At the winning
    period every offset is evaluated, so witnesses is the complete feasible
    set and best_e its minimum.
    """
    d_max = density_bound(spec).d_max
    for d in range(d_max, 0, -1):
        witnesses = tuple(e for e in range(d) if is_standard_broadcast(spec, PatternParams(d, e)))
        if witnesses:
            return SearchResult(
                spec=spec,
                best_d=d,
                best_e=witnesses[0],
                density=Fraction(1, d),
                witnesses=witnesses,
            )
    return SearchResult(spec=spec, best_d=0, best_e=None, density=None, witnesses=())


def _search_all(specs: Sequence[BroadcastSpec], jobs: int) -> list[SearchResult]:
    """Search every spec, preserving input order; jobs > 1 fans out to processes.

    Each search is a pure function of its spec, so any worker count yields
    identical results; ordered map keeps the reduction deterministic.
    """
    if jobs <= 1 or len(specs) <= 1:
        return [min_density_search(s) for s in specs]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(min_density_search, specs))


def feasibility_table(t_max: int, r_max: int, *, jobs: int = 1) -> list[SearchResult]:
    """Best lattices for every (t,r) in [1,t_max] x [1,r_max], row-major by t then r."""
    if t_max < 1 or r_max < 1:
        raise ValueError("t_max and r_max must be >= 1")
    specs = [BroadcastSpec(t, r) for t in range(1, t_max + 1) for r in range(1, r_max + 1)]
    return _search_all(specs, jobs)


def conjecture_scan(t_max: int, r_max: int, *, jobs: int = 1) -> list[ConjectureComparison]:
    """Compare best densities of (t,r) and (t+1, r+2) for all pairs in range.

    A lifted-sparser verdict (strictly smaller lifted density) refutes the
    claim that the two optima coincide.
    """
    if t_max < 1 or r_max < 1:
        raise ValueError("t_max and r_max must be >= 1")
    pairs = [
        (BroadcastSpec(t, r), BroadcastSpec(t + 1, r + 2))
        for t in range(1, t_max)
        for r in range(1, r_max - 1)
    ]
    needed = sorted({s for pair in pairs for s in pair}, key=lambda s: (s.t, s.r))
    results = dict(zip(needed, _search_all(needed, jobs)))

    comparisons = []
    for base, lifted in pairs:
        base_density = results[base].density
        lifted_density = results[lifted].density
        if base_density is None or lifted_density is None:
            verdict = ConjectureVerdict.INCOMPARABLE
        elif lifted_density == base_density:
            verdict = ConjectureVerdict.EQUAL
        elif lifted_density < base_density:
            verdict = ConjectureVerdict.LIFTED_SPARSER
        else:
            verdict = ConjectureVerdict.LIFTED_DENSER
        comparisons.append(
            ConjectureComparison(
                base=base,
                lifted=lifted,
                base_density=base_density,
                lifted_density=lifted_density,
                verdict=verdict,
            )
        )
    return comparisons
