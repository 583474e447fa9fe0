"""Self-contained SVG scatter plots on log-log axes.

Each series gets its own marker shape and a fitted-slope annotation, so
a replication-scaling probe renders as collinear points whose labelled
slope is the indicator's dimension exponent.  The raw points are also
emitted as CSV alongside the SVG, keeping the figure diffable and the
data re-plottable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError, NonPositivePointError
from .scaling import fit_loglog

__all__ = ["PlotSeries", "emit_loglog_svg"]

_MARKERS = ("circle", "square", "triangle", "diamond", "cross")
_COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")


@dataclass(frozen=True)
class PlotSeries:
    """A named point set destined for log-log axes."""

    name: str
    points: tuple[tuple[float, float], ...]

    def __init__(self, name: str, points: Sequence[Sequence[float]]) -> None:
        object.__setattr__(self, "name", name)
        object.__setattr__(
            self, "points", tuple((float(x), float(y)) for x, y in points)
        )


def _check_positive(series: PlotSeries) -> None:
    for x, y in series.points:
        if x <= 0 or y <= 0:
            raise NonPositivePointError(
                f"series {series.name!r}: point ({x:g}, {y:g}) is not plottable on log axes"
            )


def _marker_svg(shape: str, x: float, y: float, color: str) -> str:
    r = 4.0
    if shape == "circle":
        return f'<circle cx="{x:.2f}" cy="{y:.2f}" r="{r}" fill="{color}"/>'
    if shape == "square":
        return (
            f'<rect x="{x - r:.2f}" y="{y - r:.2f}" width="{2 * r}" height="{2 * r}" '
            f'fill="{color}"/>'
        )
    if shape == "triangle":
        pts = f"{x:.2f},{y - r:.2f} {x - r:.2f},{y + r:.2f} {x + r:.2f},{y + r:.2f}"
        return f'<polygon points="{pts}" fill="{color}"/>'
    if shape == "diamond":
        pts = f"{x:.2f},{y - r:.2f} {x + r:.2f},{y:.2f} {x:.2f},{y + r:.2f} {x - r:.2f},{y:.2f}"
        return f'<polygon points="{pts}" fill="{color}"/>'
    return (
        f'<path d="M {x - r:.2f} {y - r:.2f} L {x + r:.2f} {y + r:.2f} '
        f'M {x - r:.2f} {y + r:.2f} L {x + r:.2f} {y - r:.2f}" '
        f'stroke="{color}" stroke-width="2"/>'
    )


def emit_loglog_svg(
    series: Sequence[PlotSeries],
    width: int = 640,
    height: int = 480,
    title: str = "",
) -> tuple[str, str]:
    """Render series to (svg_text, points_csv_text).

    Every point must be strictly positive; every series needs at least
    three points for its slope fit (fewer raise
    :class:`DegenerateSeriesError`, propagated from the fit).
    """
    if not series:
        raise DomainError("nothing to plot")
    for s in series:
        _check_positive(s)
    fits = [fit_loglog([p[0] for p in s.points], [p[1] for p in s.points]) for s in series]

    xs = [math.log10(p[0]) for s in series for p in s.points]
    ys = [math.log10(p[1]) for s in series for p in s.points]
    lo_x, hi_x = min(xs), max(xs)
    lo_y, hi_y = min(ys), max(ys)
    if hi_x - lo_x < 1e-12:
        lo_x, hi_x = lo_x - 0.5, hi_x + 0.5
    if hi_y - lo_y < 1e-12:
        lo_y, hi_y = lo_y - 0.5, hi_y + 0.5
    pad_x = 0.06 * (hi_x - lo_x)
    pad_y = 0.06 * (hi_y - lo_y)
    lo_x, hi_x = lo_x - pad_x, hi_x + pad_x
    lo_y, hi_y = lo_y - pad_y, hi_y + pad_y

    ml, mr, mt, mb = 64, 16, 28, 44
    plot_w = width - ml - mr
    plot_h = height - mt - mb

    def sx(lx: float) -> float:
        return ml + (lx - lo_x) / (hi_x - lo_x) * plot_w

    def sy(ly: float) -> float:
        return mt + (hi_y - ly) / (hi_y - lo_y) * plot_h

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
        f'<rect x="{ml}" y="{mt}" width="{plot_w}" height="{plot_h}" '
        'fill="none" stroke="#333" stroke-width="1"/>',
    ]
    if title:
        parts.append(
            f'<text x="{width / 2:.0f}" y="{mt - 10}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="13">{title}</text>'
        )

    # Decade gridlines and labels on both log axes.
    for decade in range(math.ceil(lo_x), math.floor(hi_x) + 1):
        x = sx(decade)
        parts.append(
            f'<line x1="{x:.2f}" y1="{mt}" x2="{x:.2f}" y2="{mt + plot_h}" '
            'stroke="#ccc" stroke-width="0.5"/>'
        )
        parts.append(
            f'<text x="{x:.2f}" y="{mt + plot_h + 16}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="11">10^{decade}</text>'
        )
    for decade in range(math.ceil(lo_y), math.floor(hi_y) + 1):
        y = sy(decade)
        parts.append(
            f'<line x1="{ml}" y1="{y:.2f}" x2="{ml + plot_w}" y2="{y:.2f}" '
            'stroke="#ccc" stroke-width="0.5"/>'
        )
        parts.append(
            f'<text x="{ml - 6}" y="{y + 4:.2f}" text-anchor="end" '
            f'font-family="sans-serif" font-size="11">10^{decade}</text>'
        )
    parts.append(
        f'<text x="{ml + plot_w / 2:.0f}" y="{height - 8}" text-anchor="middle" '
        'font-family="sans-serif" font-size="12">scale factor</text>'
    )
    parts.append(
        f'<text x="14" y="{mt + plot_h / 2:.0f}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="12" '
        f'transform="rotate(-90 14 {mt + plot_h / 2:.0f})">indicator value</text>'
    )

    csv_lines = ["series,x,y"]
    for idx, (s, fit) in enumerate(zip(series, fits)):
        color = _COLORS[idx % len(_COLORS)]
        marker = _MARKERS[idx % len(_MARKERS)]
        x1, x2 = min(p[0] for p in s.points), max(p[0] for p in s.points)
        lx1, lx2 = math.log10(x1), math.log10(x2)
        # fit is in natural log; the log10 line shares slope and maps intercept.
        ly1 = (fit.slope * math.log(x1) + fit.intercept) / math.log(10)
        ly2 = (fit.slope * math.log(x2) + fit.intercept) / math.log(10)
        parts.append(
            f'<line x1="{sx(lx1):.2f}" y1="{sy(ly1):.2f}" x2="{sx(lx2):.2f}" '
            f'y2="{sy(ly2):.2f}" stroke="{color}" stroke-width="1" '
            'stroke-dasharray="4 3"/>'
        )
        for x, y in s.points:
            parts.append(
                _marker_svg(marker, sx(math.log10(x)), sy(math.log10(y)), color)
            )
            csv_lines.append(f"{s.name},{x!r},{y!r}")
        label_y = mt + 16 + 15 * idx
        parts.append(_marker_svg(marker, ml + 12, label_y - 4, color))
        parts.append(
            f'<text x="{ml + 22}" y="{label_y}" font-family="sans-serif" '
            f'font-size="12" fill="{color}">{s.name}: slope {fit.slope:.2f}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n", "\n".join(csv_lines) + "\n"
