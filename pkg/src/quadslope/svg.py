"""SVG rendering of a symbolic drawing (presentation only)."""

from __future__ import annotations

from typing import List, Mapping, Optional, Tuple
from xml.sax.saxutils import escape

from .drawing import Drawing
from .symgeom import numeric_realize


def _fit(pts: List[Tuple[float, float]], size: float, margin: float) -> List[Tuple[float, float]]:
    xs = [p[0] for p in pts] or [0.0]
    ys = [p[1] for p in pts] or [0.0]
    span = max(max(xs) - min(xs), max(ys) - min(ys)) or 1.0
    k = (size - 2 * margin) / span
    x0, y1 = min(xs), max(ys)
    # SVG y grows downwards
    return [(margin + (x - x0) * k, margin + (y1 - y) * k) for x, y in pts]


def render_svg(drawing: Drawing, *, size: float = 480.0, margin: float = 24.0,
               assignment: Optional[Mapping[int, float]] = None, labels: bool = True) -> str:
    pts = _fit(numeric_realize(drawing.pos, assignment), size, margin)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size:g}" height="{size:g}" '
        f'viewBox="0 0 {size:g} {size:g}">',
        '<g stroke="black" stroke-width="1.5">',
    ]
    for u, v in drawing.graph.edges():
        (x1, y1), (x2, y2) = pts[u], pts[v]
        out.append(f'<line x1="{x1:.3f}" y1="{y1:.3f}" x2="{x2:.3f}" y2="{y2:.3f}"/>')
    out.append("</g>")
    out.append('<g fill="white" stroke="black">')
    for x, y in pts:
        out.append(f'<circle cx="{x:.3f}" cy="{y:.3f}" r="4"/>')
    out.append("</g>")
    if labels:
        out.append('<g font-family="sans-serif" font-size="10" fill="#444">')
        for v, (x, y) in enumerate(pts):
            out.append(f'<text x="{x + 5:.3f}" y="{y - 5:.3f}">{escape(str(v))}</text>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
