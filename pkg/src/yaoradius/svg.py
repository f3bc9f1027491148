"""Standalone SVG drawings of point sets with stacked edge layers."""

from __future__ import annotations

from typing import Optional, Sequence
from xml.sax.saxutils import escape

from .graphs import PointSet

WIDTH = 800
HEIGHT = 600
MARGIN = 0.05

# later layers draw on top
LAYER_STYLES = [
    'stroke="#9a9a9a" stroke-width="1.5"',
    'stroke="#c0392b" stroke-width="2.5"',
    'stroke="#2471a3" stroke-width="2" stroke-dasharray="6 4"',
    'stroke="#239b56" stroke-width="2" stroke-dasharray="2 3"',
]


def _fmt(v: float) -> str:
    return f"{v:.3f}"


def canvas_map(s: PointSet, width: int = WIDTH, height: int = HEIGHT):
    """Uniform-scale map from plane to canvas, y flipped, fitting inside a 5% margin."""
    xs = [p.x for p in s] or [0.0]
    ys = [p.y for p in s] or [0.0]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    inner_w, inner_h = width * (1 - 2 * MARGIN), height * (1 - 2 * MARGIN)
    span_x, span_y = x1 - x0, y1 - y0
    if span_x == 0 and span_y == 0:
        scale = 1.0
    else:
        scale = min(inner_w / span_x if span_x else float("inf"), inner_h / span_y if span_y else float("inf"))
    ox = width * MARGIN + (inner_w - scale * span_x) / 2
    oy = height * MARGIN + (inner_h - scale * span_y) / 2

    def to_canvas(p):
        return ox + scale * (p[0] - x0), height - (oy + scale * (p[1] - y0))

    return to_canvas


def render(s: PointSet, layers: Sequence[Sequence[tuple[int, int]]] = (), labels: bool = False,
           titles: Optional[Sequence[str]] = None) -> str:
    n = len(s)
    for li, layer in enumerate(layers):
        for u, v in layer:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) in layer {li} is out of range for {n} points")
    to_canvas = canvas_map(s)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
    ]
    for li, layer in enumerate(layers):
        style = LAYER_STYLES[li % len(LAYER_STYLES)]
        name = escape(titles[li]) if titles and li < len(titles) else f"layer{li}"
        out.append(f'<g id="{name}" fill="none" {style}>')
        for u, v in layer:
            (x1, y1), (x2, y2) = to_canvas(s[u]), to_canvas(s[v])
            out.append(f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}"/>')
        out.append("</g>")
    out.append('<g id="points" fill="black">')
    for p in s:
        cx, cy = to_canvas(p)
        out.append(f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="4"/>')
    out.append("</g>")
    if labels:
        names = s.labels or [str(j) for j in range(n)]
        out.append('<g id="labels" font-family="sans-serif" font-size="14" fill="#333">')
        for p, name in zip(s, names):
            cx, cy = to_canvas(p)
            out.append(f'<text x="{_fmt(cx + 6)}" y="{_fmt(cy - 6)}">{escape(name)}</text>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
