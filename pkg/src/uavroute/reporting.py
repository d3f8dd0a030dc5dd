"""SVG path plots and convergence CSV files."""
from __future__ import annotations

import csv
import io

from .errors import EmptyHistory, EndpointMismatch
from .geometry import ThreatKind

VIEWPORT = 800
MARGIN = 0.05
MARKER_RADIUS = 5.0
DASH = "6,4"

CSV_HEADER = ("iteration", "best_total", "best_length")

_THREAT_STYLE = {
    ThreatKind.RADAR: 'fill="none" stroke="#444444" stroke-width="2"',
    ThreatKind.ARTILLERY: 'fill="none" stroke="#aa5500" stroke-width="1.5"',
}


def _transform(bounds):
    mx, my = MARGIN * bounds.width, MARGIN * bounds.height
    x0, x1 = bounds.x_min - mx, bounds.x_max + mx
    y0, y1 = bounds.y_min - my, bounds.y_max + my
    scale = min(VIEWPORT / (x1 - x0), VIEWPORT / (y1 - y0))
    ox = (VIEWPORT - scale * (x1 - x0)) / 2
    oy = (VIEWPORT - scale * (y1 - y0)) / 2

    def to_px(x, y):
        # world y points up, SVG y points down
        return ox + scale * (x - x0), VIEWPORT - (oy + scale * (y - y0))

    return to_px, scale


def _n(v: float) -> str:
    s = f"{v:.3f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def render_svg(scenario, path) -> str:
    """Plot the scenario and a path as a standalone SVG 1.1 document.

    Start is a small filled red circle, goal a small filled blue circle,
    threats are unfilled circles and the path is a black dashed polyline.
    """
    if path.start != scenario.start or path.goal != scenario.goal:
        raise EndpointMismatch("path endpoints do not match the scenario")
    to_px, scale = _transform(scenario.bounds)
    b = scenario.bounds
    bx0, by0 = to_px(b.x_min, b.y_max)
    bx1, by1 = to_px(b.x_max, b.y_min)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{VIEWPORT}" height="{VIEWPORT}" '
        f'viewBox="0 0 {VIEWPORT} {VIEWPORT}">',
        f"<title>{_escape(scenario.name)}</title>",
        f'<rect x="{_n(bx0)}" y="{_n(by0)}" width="{_n(bx1 - bx0)}" height="{_n(by1 - by0)}" '
        'fill="white" stroke="#cccccc" stroke-width="1"/>',
    ]
    for t in scenario.threats:
        cx, cy = to_px(*t.center)
        out.append(
            f'<circle class="threat {t.kind.value}" cx="{_n(cx)}" cy="{_n(cy)}" r="{_n(scale * t.radius)}" '
            f"{_THREAT_STYLE[t.kind]}/>"
        )
    pts = " ".join(f"{_n(x)},{_n(y)}" for x, y in (to_px(*p) for p in path.vertices))
    out.append(
        f'<polyline class="path" points="{pts}" fill="none" stroke="black" stroke-width="2" '
        f'stroke-dasharray="{DASH}"/>'
    )
    for cls, p, color in (("start", scenario.start, "red"), ("goal", scenario.goal, "blue")):
        cx, cy = to_px(*p)
        out.append(f'<circle class="{cls}" cx="{_n(cx)}" cy="{_n(cy)}" r="{_n(MARKER_RADIUS)}" fill="{color}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _escape(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def _g(v: float) -> str:
    return format(v, ".6g")


def write_convergence_csv(history) -> str:
    """CSV text with columns ``iteration,best_total,best_length`` and LF endings."""
    if not history:
        raise EmptyHistory("convergence history is empty")
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for it, total, length in history:
        w.writerow((int(it), _g(total), _g(length)))
    return buf.getvalue()


def read_convergence_csv(text: str) -> list[tuple[int, float, float]]:
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or tuple(rows[0]) != CSV_HEADER:
        raise ValueError(f"unexpected header {rows[0] if rows else None!r}")
    return [(int(r[0]), float(r[1]), float(r[2])) for r in rows[1:]]
