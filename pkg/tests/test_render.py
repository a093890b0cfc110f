import pytest

from gridcast import (
    BroadcastSpec,
    GridPoint,
    PatternParams,
    Viewport,
    render_ascii,
    render_svg,
    total_signal,
)


def test_period_one_fills_viewport():
    out = render_ascii(PatternParams(1, 0), Viewport(3, 3))
    assert out == "TTT\nTTT\nTTT"


def test_ascii_matches_lattice_rows():
    out = render_ascii(PatternParams(4, 2), Viewport(8, 2))
    assert out == "..T...T.\nT...T..."


def test_ascii_signal_digits():
    out = render_ascii(PatternParams(2, 1), Viewport(2, 2), BroadcastSpec(1, 1))
    assert out == "0T\nT0"


def test_ascii_signal_overflow_glyph():
    spec, params = BroadcastSpec(4, 1), PatternParams(2, 0)
    assert total_signal(spec, params, GridPoint(1, 0)) >= 10
    out = render_ascii(params, Viewport(4, 1), spec)
    assert out == "T+T+"


def test_ascii_translation_shifts_sampling():
    params = PatternParams(2, 0)
    shifted = render_ascii(params, Viewport(2, 1, translation=GridPoint(1, 0)))
    assert shifted == ".T"
    unshifted = render_ascii(params, Viewport(2, 1))
    assert unshifted == "T."


def test_viewport_validation():
    with pytest.raises(ValueError):
        Viewport(0, 3)
    with pytest.raises(ValueError):
        Viewport(1001, 1000)  # > 10^6 cells
    Viewport(1000, 1000)  # exactly at the limit is fine


def test_single_tower_svg():
    out = render_svg(PatternParams(1, 0), Viewport(1, 1))
    assert out.startswith("<?xml")
    assert out.rstrip().endswith("</svg>")
    assert out.count("<circle") == 1
    assert out.count("<polygon") == 0


def test_svg_is_deterministic():
    params, vp, spec = PatternParams(5, 3), Viewport(8, 7), BroadcastSpec(2, 1)
    assert render_svg(params, vp, spec) == render_svg(params, vp, spec)


@pytest.mark.parametrize(
    "d,e,width,height,t",
    [(5, 3, 8, 7, 2), (8, 2, 12, 7, 4), (4, 2, 15, 9, None), (13, 5, 15, 9, None)],
)
def test_svg_and_ascii_mark_the_same_towers(d, e, width, height, t):
    params = PatternParams(d, e)
    vp = Viewport(width, height)
    spec = BroadcastSpec(t, 1) if t is not None else None
    ascii_towers = sum(line.count("T") for line in render_ascii(params, vp, spec).splitlines())
    svg = render_svg(params, vp, spec)
    assert svg.count("<circle") == ascii_towers
    if spec is not None:
        assert svg.count("<polygon") == ascii_towers * (spec.t - 1)


def test_svg_coverage_diamonds_follow_strength():
    params, vp = PatternParams(8, 2), Viewport(12, 7)
    towers = sum(line.count("T") for line in render_ascii(params, vp).splitlines())
    svg = render_svg(params, vp, BroadcastSpec(4, 5))
    assert svg.count("<polygon") == 3 * towers
    assert 'clip-path="url(#grid-clip)"' in svg
