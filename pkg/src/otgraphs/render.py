"""SVG drawings of point sets with OT-graphs or exit graphs."""
from __future__ import annotations

from typing import Iterable, Optional, Sequence
from xml.sax.saxutils import escape

from .geometry import PointSet
from .graph import AnnotatedGraph, Graph, exit_edges

CANVAS = 600
MARGIN = 30


class _Frame:
    """Affine map from point coordinates to the canvas, y pointing up."""

    def __init__(self, s: PointSet):
        xs = [p.x for p in s] or [0]
        ys = [p.y for p in s] or [0]
        self.x0, self.x1 = min(xs), max(xs)
        self.y0, self.y1 = min(ys), max(ys)
        span = max(self.x1 - self.x0, self.y1 - self.y0, 1)
        self.k = (CANVAS - 2 * MARGIN) / span

    def __call__(self, x: float, y: float) -> tuple[float, float]:
        return MARGIN + (x - self.x0) * self.k, CANVAS - MARGIN - (y - self.y0) * self.k

    def box(self) -> tuple[float, float, float, float]:
        pad = MARGIN / self.k
        return self.x0 - pad, self.y0 - pad, self.x0 + (CANVAS - MARGIN) / self.k, self.y0 + (CANVAS - MARGIN) / self.k


def _clip_line(p, q, box) -> Optional[tuple[tuple[float, float], tuple[float, float]]]:
    """The part of the infinite line pq inside ``box`` (Liang-Barsky)."""
    xmin, ymin, xmax, ymax = box
    dx, dy = q[0] - p[0], q[1] - p[1]
    lo, hi = float("-inf"), float("inf")
    for d, a, b in ((dx, p[0] - xmin, xmax - p[0]), (dy, p[1] - ymin, ymax - p[1])):
        if d == 0:
            if a < 0 or b < 0:
                return None
            continue
        t1, t2 = -a / d, b / d
        if d < 0:
            t1, t2 = t2, t1
        lo, hi = max(lo, t1), min(hi, t2)
    if lo > hi:
        return None
    return (p[0] + lo * dx, p[1] + lo * dy), (p[0] + hi * dx, p[1] + hi * dy)


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def render_svg(g: Graph | AnnotatedGraph, s: PointSet, draw_lines: Iterable[Sequence[int]] = (),
               draw_hourglasses: bool = False, title: Optional[str] = None) -> str:
    """SVG text with one ``circle`` per point, one solid ``line`` per edge,
    a dashed ``line`` for each edge in ``draw_lines`` (extended across the
    canvas), and with ``draw_hourglasses`` a gray double wedge pair for every
    exit edge witness."""
    graph = g.graph if isinstance(g, AnnotatedGraph) else g
    if graph.n != len(s):
        raise ValueError("graph and point set sizes differ")
    f = _Frame(s)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{CANVAS}" height="{CANVAS}" '
        f'viewBox="0 0 {CANVAS} {CANVAS}">',
        f'<rect x="0" y="0" width="{CANVAS}" height="{CANVAS}" fill="white"/>',
    ]
    if title:
        parts.append(f'<title>{escape(title)}</title>')
    if draw_hourglasses:
        parts.append('<g class="hourglasses" fill="gray" fill-opacity="0.25" stroke="none">')
        far = 4 * max(f.x1 - f.x0, f.y1 - f.y0, 1)
        for (a, b), wits in sorted(exit_edges(s).items()):
            if (a, b) not in graph:
                continue
            for c in wits:
                for apex, u in ((a, b), (b, a)):
                    P, U, C = s[apex], s[u], s[c]
                    for sign in (1, -1):
                        du = (U.x - P.x, U.y - P.y)
                        dc = (C.x - P.x, C.y - P.y)
                        nu = max(abs(du[0]), abs(du[1]), 1)
                        nc = max(abs(dc[0]), abs(dc[1]), 1)
                        p1 = (P.x + sign * far * du[0] / nu, P.y + sign * far * du[1] / nu)
                        p2 = (P.x + sign * far * dc[0] / nc, P.y + sign * far * dc[1] / nc)
                        pts = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in (f(P.x, P.y), f(*p1), f(*p2)))
                        parts.append(f'<polygon class="hourglass" points="{pts}"/>')
        parts.append("</g>")
    box = f.box()
    for a, b in draw_lines:
        seg = _clip_line(tuple(s[a]), tuple(s[b]), box)
        if seg is None:
            continue
        (x1, y1), (x2, y2) = f(*seg[0]), f(*seg[1])
        parts.append(f'<line class="support" x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
                     'stroke="steelblue" stroke-width="1" stroke-dasharray="6,4"/>')
    for a, b in graph.edges:
        (x1, y1), (x2, y2) = f(*s[a]), f(*s[b])
        parts.append(f'<line class="edge" x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
                     'stroke="firebrick" stroke-width="2.5"/>')
    for i, p in enumerate(s):
        x, y = f(p.x, p.y)
        parts.append(f'<circle class="point" cx="{_fmt(x)}" cy="{_fmt(y)}" r="5" fill="black"/>')
        parts.append(f'<text x="{_fmt(x + 7)}" y="{_fmt(y - 7)}" font-size="14" font-family="sans-serif">{i}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
