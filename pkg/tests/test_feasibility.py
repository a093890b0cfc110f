import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gridcast import (
    BroadcastSpec,
    GridPoint,
    PatternParams,
    brute_force_check,
    deficit_report,
    density_bound,
    is_standard_broadcast,
    representative_totals,
    total_signal,
)

specs_st = st.builds(BroadcastSpec, t=st.integers(1, 6), r=st.integers(1, 8))
params_st = st.builds(PatternParams, d=st.integers(1, 25), e=st.integers(0, 24))


def test_known_feasible_patterns():
    assert is_standard_broadcast(BroadcastSpec(2, 1), PatternParams(5, 2))
    assert is_standard_broadcast(BroadcastSpec(2, 1), PatternParams(5, 3))
    assert is_standard_broadcast(BroadcastSpec(4, 5), PatternParams(8, 2))


def test_period_six_never_works_at_t2_r1():
    for e in range(6):
        assert not is_standard_broadcast(BroadcastSpec(2, 1), PatternParams(6, e))


@given(specs_st, params_st)
@settings(max_examples=300, deadline=None)
def test_fast_path_agrees_with_per_vertex_totals(spec, params):
    totals = representative_totals(spec, params)
    assert len(totals) == params.d
    for i in range(params.d):
        assert totals[i] == total_signal(spec, params, GridPoint(i, 0))


def test_deficit_report_examples():
    record = deficit_report(BroadcastSpec(2, 6), PatternParams(1, 0))
    assert record.feasible
    assert record.row_totals == ((GridPoint(0, 0), 6),)
    assert record.deficits() == ()

    record = deficit_report(BroadcastSpec(2, 7), PatternParams(1, 0))
    assert not record.feasible
    assert record.row_totals == ((GridPoint(0, 0), 6),)
    assert record.deficits() == ((GridPoint(0, 0), 6),)

    record = deficit_report(BroadcastSpec(1, 1), PatternParams(1, 0))
    assert record.feasible and record.row_totals == ((GridPoint(0, 0), 1),)


@given(specs_st, params_st)
@settings(max_examples=100, deadline=None)
def test_deficit_report_consistent_with_verdict(spec, params):
    record = deficit_report(spec, params)
    assert record.feasible == is_standard_broadcast(spec, params)
    assert record.feasible == all(s >= spec.r for _, s in record.row_totals)
    assert len(record.row_totals) == params.d


def test_brute_force_check_examples():
    assert brute_force_check(BroadcastSpec(2, 1), PatternParams(5, 2), 20)
    assert not brute_force_check(BroadcastSpec(2, 1), PatternParams(7, 3), 20)
    assert not brute_force_check(BroadcastSpec(1, 1), PatternParams(2, 0), 5)
    with pytest.raises(ValueError):
        brute_force_check(BroadcastSpec(1, 1), PatternParams(1, 0), 0)


@pytest.mark.parametrize("t,r", [(t, r) for t in range(1, 4) for r in range(1, 5)])
def test_fast_path_matches_brute_force(t, r):
    spec = BroadcastSpec(t, r)
    for d in range(1, density_bound(spec).d_max + 1):
        for e in range(d):
            params = PatternParams(d, e)
            fast = is_standard_broadcast(spec, params)
            assert fast == brute_force_check(spec, params, 3 * (t + d)), (t, r, d, e)


@given(
    specs_st,
    params_st,
    st.integers(-20, 20),
    st.integers(-20, 20),
    st.integers(-30, 30),
)
@settings(max_examples=200)
def test_lattice_translates_preserve_total_signal(spec, params, x, y, k):
    d, e = params.d, params.e
    at_row_zero = total_signal(spec, params, GridPoint(k, 0))
    at_translate = total_signal(spec, params, GridPoint(d * x + e * y + k, y))
    assert at_row_zero == at_translate


@given(specs_st, params_st)
@settings(max_examples=200, deadline=None)
def test_feasibility_is_reflection_symmetric(spec, params):
    assert is_standard_broadcast(spec, params) == is_standard_broadcast(spec, params.reflect())


@given(specs_st, params_st)
@settings(max_examples=200, deadline=None)
def test_feasibility_monotone_in_r_and_t(spec, params):
    if not is_standard_broadcast(spec, params):
        return
    if spec.r >= 2:
        assert is_standard_broadcast(BroadcastSpec(spec.t, spec.r - 1), params)
    assert is_standard_broadcast(BroadcastSpec(spec.t + 1, spec.r), params)
