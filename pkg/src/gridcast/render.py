"""ASCII and SVG diagrams of tower lattices and their signal coverage."""

from __future__ import annotations

from dataclasses import dataclass

from .lattice import BroadcastSpec, GridPoint, PatternParams, Window
from .signals import signal_field

MAX_VIEWPORT_CELLS = 10**6

TOWER_GLYPH = "T"
EMPTY_GLYPH = "."
OVERFLOW_GLYPH = "+"  # signal values >= 10 in ASCII mode

# SVG styling is fixed; determinism matters more than aesthetics.
SVG_CELL_PX = 24
SVG_MARGIN_PX = 12
SVG_GRID_COLOR = "#c8c8c8"
SVG_TOWER_COLOR = "#222222"
SVG_TOWER_RADIUS_PX = 7
SVG_DIAMOND_COLOR = "#cc3333"
SVG_BACKGROUND = "#ffffff"


@dataclass(frozen=True)
class Viewport:
    """A width x height clip of the grid with lower-left corner at origin.

    The translation shifts which part of the lattice is sampled: a cell c
    is drawn as a tower iff c + translation belongs to the lattice.
    """

    width: int
    height: int
    origin: GridPoint = GridPoint(0, 0)
    translation: GridPoint = GridPoint(0, 0)

    def __post_init__(self) -> None:
        if self.width < 1 or self.height < 1:
            raise ValueError(f"viewport must be at least 1x1, got {self.width}x{self.height}")
        if self.width * self.height > MAX_VIEWPORT_CELLS:
            raise ValueError(
                f"viewport of {self.width * self.height} cells exceeds the "
                f"{MAX_VIEWPORT_CELLS}-cell limit"
            )

    def sample_window(self) -> Window:
        """The lattice-coordinate window this viewport samples (translation applied)."""
        x0 = self.origin.x + self.translation.x
        y0 = self.origin.y + self.translation.y
        return Window(x0, x0 + self.width - 1, y0, y0 + self.height - 1)


def _tower_mask(params: PatternParams, vp: Viewport) -> list[list[bool]]:
    """mask[row][col] for rows bottom-up in grid order."""
    w = vp.sample_window()
    return [
        [params.contains(GridPoint(x, y)) for x in range(w.x_min, w.x_max + 1)]
        for y in range(w.y_min, w.y_max + 1)
    ]


def render_ascii(params: PatternParams, vp: Viewport, spec: BroadcastSpec | None = None) -> str:
    """Text diagram, top line = highest row.

    Towers render as T.  Without a spec other cells are dots; with one they
    show their total signal as a digit, or + for values of 10 and above.
    """
    mask = _tower_mask(params, vp)
    field = signal_field(spec, params, vp.sample_window()) if spec is not None else None

    lines = []
    for row in range(vp.height - 1, -1, -1):
        chars = []
        for col in range(vp.width):
            if mask[row][col]:
                chars.append(TOWER_GLYPH)
            elif field is None:
                chars.append(EMPTY_GLYPH)
            else:
                value = int(field[row, col])
                chars.append(str(value) if value < 10 else OVERFLOW_GLYPH)
        lines.append("".join(chars))
    return "\n".join(lines)


def render_svg(params: PatternParams, vp: Viewport, spec: BroadcastSpec | None = None) -> str:
    """Standalone SVG 1.1 document: gridlines, tower circles, coverage diamonds.

    With a spec, each tower is wrapped in concentric diamond outlines at
    Manhattan radii 1 .. t-1 (the reach of its signal), clipped to the grid.
    Output is byte-identical for identical inputs.
    """
    cell = SVG_CELL_PX
    grid_w = vp.width * cell
    grid_h = vp.height * cell
    doc_w = grid_w + 2 * SVG_MARGIN_PX
    doc_h = grid_h + 2 * SVG_MARGIN_PX

    def px(col: int, row: int) -> tuple[int, int]:
        # Center of the cell; grid rows grow upward, SVG y grows downward.
        cx = SVG_MARGIN_PX + col * cell + cell // 2
        cy = SVG_MARGIN_PX + (vp.height - 1 - row) * cell + cell // 2
        return cx, cy

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{doc_w}" height="{doc_h}" viewBox="0 0 {doc_w} {doc_h}">',
        f'<rect x="0" y="0" width="{doc_w}" height="{doc_h}" fill="{SVG_BACKGROUND}"/>',
        f'<clipPath id="grid-clip"><rect x="{SVG_MARGIN_PX}" y="{SVG_MARGIN_PX}" '
        f'width="{grid_w}" height="{grid_h}"/></clipPath>',
    ]

    for col in range(vp.width + 1):
        x = SVG_MARGIN_PX + col * cell
        out.append(
            f'<line x1="{x}" y1="{SVG_MARGIN_PX}" x2="{x}" y2="{SVG_MARGIN_PX + grid_h}" '
            f'stroke="{SVG_GRID_COLOR}" stroke-width="1"/>'
        )
    for row in range(vp.height + 1):
        y = SVG_MARGIN_PX + row * cell
        out.append(
            f'<line x1="{SVG_MARGIN_PX}" y1="{y}" x2="{SVG_MARGIN_PX + grid_w}" y2="{y}" '
            f'stroke="{SVG_GRID_COLOR}" stroke-width="1"/>'
        )

    mask = _tower_mask(params, vp)
    towers = [
        (col, row) for row in range(vp.height) for col in range(vp.width) if mask[row][col]
    ]

    if spec is not None and spec.t > 1:
        out.append('<g clip-path="url(#grid-clip)">')
        for col, row in towers:
            cx, cy = px(col, row)
            for radius in range(1, spec.t):
                rp = radius * cell
                out.append(
                    f'<polygon points="{cx},{cy - rp} {cx + rp},{cy} {cx},{cy + rp} {cx - rp},{cy}" '
                    f'fill="none" stroke="{SVG_DIAMOND_COLOR}" stroke-width="1"/>'
                )
        out.append("</g>")

    for col, row in towers:
        cx, cy = px(col, row)
        out.append(f'<circle cx="{cx}" cy="{cy}" r="{SVG_TOWER_RADIUS_PX}" fill="{SVG_TOWER_COLOR}"/>')

    out.append("</svg>")
    return "\n".join(out)
