"""Deterministic SVG rendering of regions and the standard figure gallery.

One <path> element is emitted per convex piece, with raw mathematical
coordinates at 12 significant digits inside a y-flipping group, so a parser
can recover the exact vertex data up to float formatting.  Figures are laid
out as one <g class="panel"> per panel, each panel translated horizontally;
coordinates inside a panel stay untranslated.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .exactfield import Scalar, rational
from .geom2d import Region
from .groups import group, orbit

__all__ = ["RenderSpec", "render_svg", "render_figure", "FIGURE_NUMBERS", "orbit_render_spec"]

# fill palette for orbit coloring; 12 classes cover the largest point group
_PALETTE = (
    "#3b6fb6",
    "#b63b3b",
    "#3bb66f",
    "#b6a13b",
    "#6f3bb6",
    "#3bb6b0",
    "#b63b8a",
    "#7ab63b",
    "#b66f3b",
    "#3b46b6",
    "#8ab63b",
    "#b63b50",
)

_SCALE = 120.0  # user units per coordinate unit


@dataclass(frozen=True)
class RenderSpec:
    """What to draw: (region, style class index) pairs and an exact viewport
    that contains them all."""

    items: tuple[tuple[Region, int], ...]
    viewport: tuple[Scalar, Scalar, Scalar, Scalar]
    orbit_coloring: bool = False


def _num(x: float) -> str:
    return f"{x:.12g}"


def spec_from_items(
    items: Sequence[tuple[Region, int]], orbit_coloring: bool = False
) -> RenderSpec:
    regions = [r for r, _ in items if not r.is_empty]
    if not regions:
        z = Scalar(0)
        return RenderSpec(tuple(items), (z, z, Scalar(1), Scalar(1)), orbit_coloring)
    boxes = [r.bbox() for r in regions]
    pad = Scalar(rational(1, 4))
    viewport = (
        min(b[0] for b in boxes) - pad,
        min(b[1] for b in boxes) - pad,
        max(b[2] for b in boxes) + pad,
        max(b[3] for b in boxes) + pad,
    )
    return RenderSpec(tuple(items), viewport, orbit_coloring)


def orbit_render_spec(group_name: str, region: Region) -> RenderSpec:
    """The region's point-group orbit, one style class per element."""
    images = orbit(group(group_name), region)
    return spec_from_items([(img, i) for i, img in enumerate(images)], orbit_coloring=True)


def _style_block() -> str:
    rules = [
        "path{stroke:#222222;stroke-width:1;vector-effect:non-scaling-stroke;fill-opacity:0.75}"
    ]
    for i, color in enumerate(_PALETTE):
        rules.append(f".c{i}{{fill:{color}}}")
    return "<style>" + "".join(rules) + "</style>"


def _piece_path(piece) -> str:
    pts = [v.to_floats() for v in piece.vertices]
    head = f"M {_num(pts[0][0])} {_num(pts[0][1])}"
    rest = " ".join(f"L {_num(x)} {_num(y)}" for x, y in pts[1:])
    return f"{head} {rest} Z"


def _panel_group(items: Sequence[tuple[Region, int]], dx: float, dy: float) -> str:
    """Panel with raw math coordinates inside a translate + y-flip + scale
    group, so path data stays parseable as geometry."""
    paths = []
    for region, cls in items:
        for piece in region.pieces:
            paths.append(
                f'<path class="c{cls % len(_PALETTE)}" d="{_piece_path(piece)}"/>'
            )
    transform = f"translate({_num(dx)} {_num(dy)}) scale({_num(_SCALE)} {_num(-_SCALE)})"
    return f'<g class="panel" transform="{transform}">' + "".join(paths) + "</g>"


def render_svg(spec: RenderSpec) -> str:
    """Single-panel SVG document for a render spec."""
    x0, y0, x1, y1 = (v.to_float() for v in spec.viewport)
    w = max((x1 - x0) * _SCALE, 1.0)
    h = max((y1 - y0) * _SCALE, 1.0)
    body = _panel_group(spec.items, -x0 * _SCALE, y1 * _SCALE)
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_num(w)}" height="{_num(h)}" '
        f'viewBox="0 0 {_num(w)} {_num(h)}">'
        + _style_block()
        + body
        + "</svg>\n"
    )


def _panels_side_by_side(panels: Sequence[Sequence[tuple[Region, int]]]) -> str:
    """Multi-panel SVG document; panels are placed left to right."""
    specs = [spec_from_items(p) for p in panels]
    gap = 0.5
    heights = [(s.viewport[3] - s.viewport[1]).to_float() for s in specs]
    total_h = max(heights) if heights else 1.0
    parts = []
    dx = 0.0
    for s in specs:
        x0, y0, x1, y1 = (v.to_float() for v in s.viewport)
        parts.append(_panel_group(s.items, (dx - x0) * _SCALE, y1 * _SCALE))
        dx += (x1 - x0) + gap
    width = max((dx - gap) * _SCALE, 1.0)
    height = total_h * _SCALE
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_num(width)}" height="{_num(height)}" '
        f'viewBox="0 0 {_num(width)} {_num(height)}">'
        + _style_block()
        + "".join(parts)
        + "</svg>\n"
    )


def _single(region: Region) -> list[tuple[Region, int]]:
    return [(region, 0)]


def _orbit_items(group_name: str, region: Region) -> list[tuple[Region, int]]:
    return [(img, i) for i, img in enumerate(orbit(group(group_name), region))]


def _figure_panels(number: int, depth: int) -> list[list[tuple[Region, int]]]:
    from . import builder, catalog

    def cat(key: str) -> Region:
        return catalog.build(key).region

    if number == 1:
        w = builder.wavelet_from_scaling(builder.classic_spec(depth))
        return [
            _single(w),
            _single(builder.transport("Lp", w)),
            _single(builder.transport("L", w)),
        ]
    if number == 2:
        d = catalog.build("fig2_diamond_split").parts
        r = catalog.build("fig2_right_split").parts
        return [
            [(d[0], 0), (d[1], 1)],
            [(r[0], 0), (r[1], 1)],
        ]
    if number == 3:
        return [_single(cat("W_pm")), _single(cat("W_p2")), _single(cat("W_cm"))]
    if number == 4:
        w = cat("W_pmm")
        return [_single(w), _orbit_items("pmm", w), _orbit_items("p4", w)]
    if number == 5:
        w = cat("W_p6")
        return [_single(w), _orbit_items("p6", w)]
    if number == 6:
        return [
            _single(cat("W_p4")),
            _single(cat("W_p3")),
            _orbit_items("p3", cat("W_p3")),
        ]
    if number == 7:
        a = catalog.build("W_p4_a").region
        b = catalog.build("W_p4_b").region
        w = cat("W_cmm")
        return [[(a, 0), (b, 1)], _single(w), _orbit_items("cmm", w)]
    if number == 8:
        w = cat("W_p4m")
        return [_single(w), _orbit_items("p4m", w), _single(cat("W_p6m"))]
    if number == 9:
        return [
            _single(cat("D")),
            _single(cat("W_p3m1")),
            _orbit_items("p3m1", cat("W_p3m1")),
        ]
    raise ValueError(f"no figure {number}; valid numbers are 1..9")


FIGURE_NUMBERS = tuple(range(1, 10))


def render_figure(number: int, depth: int = 6) -> str:
    """Figure gallery: the iterative construction (1), the conventional
    2-wavelet annuli (2), and the catalog sets with their orbits (3-9)."""
    return _panels_side_by_side(_figure_panels(number, depth))


def figure_panel_items(number: int, depth: int = 6) -> list[list[tuple[Region, int]]]:
    """The regions behind each figure panel, for structural checks."""
    return _figure_panels(number, depth)
