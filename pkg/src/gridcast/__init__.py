"""Upper bounds on optimal (t,r) broadcast densities via periodic lattices.

A tower of strength t at vertex T gives each grid vertex v the signal
max(t - dist(v, T), 0); a tower set is a (t,r) broadcast when every vertex
collects total signal at least r.  This package searches the periodic
lattices p(d,e) = {(d*x + e*y, y)} exhaustively for the sparsest one that
broadcasts at a given (t,r), yielding density upper bounds of the form 1/d.
"""

from .feasibility import (
    FeasibilityRecord,
    brute_force_check,
    default_oracle_extent,
    deficit_report,
    is_standard_broadcast,
    representative_totals,
)
from .lattice import (
    ORIGIN,
    BroadcastSpec,
    GridPoint,
    PatternParams,
    Window,
    canonicalize,
    manhattan_distance,
    pattern_row_xs,
    row_representatives,
    towers_in_window,
)
from .render import Viewport, render_ascii, render_svg
from .search import (
    ConjectureComparison,
    ConjectureVerdict,
    SearchResult,
    conjecture_scan,
    feasibility_table,
    min_density_search,
)
from .signals import (
    DensityBound,
    closed_form_density,
    density_bound,
    sig,
    signal_field,
    total_signal,
    usable_signal,
)

__all__ = [
    "ORIGIN",
    "BroadcastSpec",
    "ConjectureComparison",
    "ConjectureVerdict",
    "DensityBound",
    "FeasibilityRecord",
    "GridPoint",
    "PatternParams",
    "SearchResult",
    "Viewport",
    "Window",
    "brute_force_check",
    "canonicalize",
    "closed_form_density",
    "conjecture_scan",
    "default_oracle_extent",
    "deficit_report",
    "density_bound",
    "feasibility_table",
    "is_standard_broadcast",
    "manhattan_distance",
    "min_density_search",
    "pattern_row_xs",
    "render_ascii",
    "render_svg",
    "representative_totals",
    "row_representatives",
    "sig",
    "signal_field",
    "total_signal",
    "towers_in_window",
    "usable_signal",
]

__version__ = "0.1.0"
