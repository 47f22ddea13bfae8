"""Static SVG renderings of point sets, bisector profiles and constructions.

Exact coordinates are rounded to three decimals for drawing only; element
order and formatting are fixed so identical inputs give identical bytes.
The viewBox is the bounding box of the drawn geometry plus a 5% margin.
"""

from __future__ import annotations

from fractions import Fraction

from .geom import Color, Point, PointSet
from .depth import weight_sequence

_FILL = {Color.RED: "#c62828", Color.BLUE: "#1565c0", Color.UNCOLORED: "#333333"}


def _fmt(value: float) -> str:
    text = f"{value:.3f}"
    return "0.000" if text == "-0.000" else text


class _Canvas:
    def __init__(self):
        self.elements: list[str] = []
        self.xs: list[float] = []
        self.ys: list[float] = []

    def _track(self, x: float, y: float) -> None:
        self.xs.append(x)
        self.ys.append(y)

    def line(self, a, b, stroke: str, width_frac: float = 0.002) -> None:
        self._track(*a)
        self._track(*b)
        self.elements.append(
            ("line", a[0], a[1], b[0], b[1], stroke, width_frac)
        )

    def circle(self, center, radius_frac: float, fill: str) -> None:
        self._track(center[0] - 1, center[1] - 1)
        self._track(center[0] + 1, center[1] + 1)
        self.elements.append(("circle", center[0], center[1], radius_frac, fill))

    def text(self, pos, content: str, size_frac: float = 0.025) -> None:
        self._track(*pos)
        self.elements.append(("text", pos[0], pos[1], content, size_frac))

    def render(self) -> str:
        min_x, max_x = min(self.xs), max(self.xs)
        min_y, max_y = min(self.ys), max(self.ys)
        span = max(max_x - min_x, max_y - min_y, 1e-9)
        margin = 0.05 * span
        vb = (min_x - margin, min_y - margin, (max_x - min_x) + 2 * margin, (max_y - min_y) + 2 * margin)
        out = [
            '<?xml version="1.0" encoding="UTF-8"?>',
            f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{_fmt(vb[0])} {_fmt(vb[1])} '
            f'{_fmt(vb[2])} {_fmt(vb[3])}">',
        ]
        for element in self.elements:
            if element[0] == "line":
                _, x1, y1, x2, y2, stroke, wf = element
                out.append(
                    f'  <line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
                    f'stroke="{stroke}" stroke-width="{_fmt(wf * span)}" />'
                )
            elif element[0] == "circle":
                _, cx, cy, rf, fill = element
                out.append(
                    f'  <circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(rf * span)}" fill="{fill}" />'
                )
            else:
                _, x, y, content, sf = element
                out.append(
                    f'  <text x="{_fmt(x)}" y="{_fmt(y)}" font-size="{_fmt(sf * span)}" '
                    f'font-family="monospace" fill="#000000">{content}</text>'
                )
        out.append("</svg>")
        return "\n".join(out) + "\n"


def _xy(p: Point) -> tuple[float, float]:
    # SVG y grows downward; flip so the picture matches the usual orientation.
    return float(p.x), -float(p.y)


def render_points(ps: PointSet) -> str:
    canvas = _Canvas()
    for cp in ps.points:
        canvas.circle(_xy(cp.point), 0.008, _FILL[cp.color])
    return canvas.render()


def render_profile(ps: PointSet, p: int, q: int) -> str:
    """The pair, its bisector with circumcenter ticks, and segment weights."""
    profile = weight_sequence(ps, p, q)
    canvas = _Canvas()
    pp, qp = ps.point(p), ps.point(q)
    canvas.line(_xy(pp), _xy(qp), "#999999")
    mid = profile.midpoint
    dx, dy = profile.direction
    params = [e.s for e in profile.events]
    if params:
        pad = (params[-1] - params[0]) / 2 or Fraction(1)
        lo, hi = params[0] - pad, params[-1] + pad
        samples = [lo] + [(a + b) / 2 for a, b in zip(params, params[1:])] + [hi]
    else:
        lo, hi = Fraction(-1), Fraction(1)
        samples = [Fraction(0)]
    at = lambda s: _xy(Point(mid.x + s * dx, mid.y + s * dy))
    canvas.line(at(lo), at(hi), "#555555")
    for s in params:
        canvas.circle(at(s), 0.004, "#555555")
    for s, weight in zip(samples, profile.weights):
        canvas.text(at(s), str(weight))
    for cp in ps.points:
        canvas.circle(_xy(cp.point), 0.008, _FILL[cp.color])
    return canvas.render()


def render_construction(ps: PointSet, pairs: list[tuple[int, int]]) -> str:
    canvas = _Canvas()
    for a, b in pairs:
        canvas.line(_xy(ps.point(a)), _xy(ps.point(b)), "#2e7d32", 0.003)
    for cp in ps.points:
        canvas.circle(_xy(cp.point), 0.008, _FILL[cp.color])
    return canvas.render()
