"""SVG drawings of representations.

Paths that share grid-edges would sit on top of each other, so every path
is shifted diagonally by its own small offset. Colors come from a fixed
golden-angle hue sequence in vertex order, so output is byte-stable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from xml.sax.saxutils import escape

from .graph import sort_labels
from .grid import Representation, crossing_points


@dataclass(frozen=True)
class RenderOptions:
    cell_size: float = 24.0
    path_offset: float = 2.5
    labels: bool = True
    crossings: bool = False
    margin: float = 24.0

    def __post_init__(self):
        if self.cell_size <= 0:
            raise ValueError("cell_size must be positive")
        if not 0 <= self.path_offset < self.cell_size / 2:
            raise ValueError("path_offset must lie in [0, cell_size / 2)")


def _fmt(x: float) -> str:
    s = f"{x:.2f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def _color(i: int) -> str:
    hue = (i * 137.508) % 360
    return f"hsl({_fmt(hue)},70%,40%)"


def _shift(i: int, opts: RenderOptions) -> float:
    """Offset for the i-th path; five lanes, always below half a cell."""
    lane = (i % 5) - 2
    limit = opts.cell_size / 2 * 0.9
    return max(-limit, min(limit, lane * opts.path_offset))


def render_svg(rep: Representation, opts: RenderOptions | None = None) -> str:
    opts = opts or RenderOptions()
    labels = sort_labels(rep.vertices)
    pts = [p for v in labels for p in rep[v].corners]
    if pts:
        xs = [Fraction(p[0]) for p in pts]
        ys = [Fraction(p[1]) for p in pts]
        x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    else:
        x0 = x1 = y0 = y1 = Fraction(0)
    c, m = opts.cell_size, opts.margin
    width = float(x1 - x0) * c + 2 * m
    height = float(y1 - y0) * c + 2 * m

    def sx(x):
        return float(Fraction(x) - x0) * c + m

    def sy(y):
        return float(y1 - Fraction(y)) * c + m

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    for i, v in enumerate(labels):
        d = _shift(i, opts)
        coords = " ".join(f"{_fmt(sx(x) + d)},{_fmt(sy(y) - d)}" for x, y in rep[v].corners)
        color = _color(i)
        out.append(
            f'<polyline data-vertex="{escape(v)}" points="{coords}" fill="none" '
            f'stroke="{color}" stroke-width="2" stroke-linecap="round" stroke-linejoin="round"/>'
        )
        if opts.labels:
            x, y = rep[v].corners[0]
            out.append(
                f'<text x="{_fmt(sx(x) + d + 3)}" y="{_fmt(sy(y) - d - 3)}" font-size="{_fmt(c * 0.45)}" '
                f'fill="{color}">{escape(v)}</text>'
            )
    if opts.crossings:
        seen = set()
        for u, v in itertools.combinations(labels, 2):
            seen |= crossing_points(rep[u], rep[v])
        for x, y in sorted(seen):
            out.append(f'<circle class="crossing" cx="{_fmt(sx(x))}" cy="{_fmt(sy(y))}" r="{_fmt(c * 0.15)}" fill="black"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
