"""Deterministic SVG rendering of a simulation's tick series.

Two polylines (visited nodes, visited targets) with axes, tick labels and a
legend. The output text is a pure function of the series, so identical runs
render byte-identical files. Single-point series get visible markers.
"""

from __future__ import annotations

from .errors import EmptySeriesError

WIDTH, HEIGHT = 640, 400
MARGIN_LEFT, MARGIN_RIGHT, MARGIN_TOP, MARGIN_BOTTOM = 64, 20, 36, 48

_SERIES = (
    ("visited nodes", "#1f77b4", 0),
    ("visited targets", "#d62728", 1),
)


def _x(tick: int, max_tick: int) -> float:
    span = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
    return MARGIN_LEFT + span * tick / max_tick


def _y(value: float, max_value: float) -> float:
    span = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM
    return HEIGHT - MARGIN_BOTTOM - span * value / max_value


def render_series_svg(series: list[tuple[int, int]], title: str = "") -> str:
    """SVG plot of tick vs (visited nodes, visited targets)."""
    if not series:
        raise EmptySeriesError("cannot render an empty series")
    max_tick = len(series)
    max_value = max(max(nodes, targets) for nodes, targets in series)
    max_value = max(max_value, 1)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}"'
        f' viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
    ]
    if title:
        parts.append(
            f'<text x="{WIDTH / 2:.2f}" y="20" text-anchor="middle"'
            f' font-family="sans-serif" font-size="13">{title}</text>'
        )

    # axes
    x0, y0 = _x(0, max_tick), _y(0, max_value)
    x1, y1 = _x(max_tick, max_tick), _y(max_value, max_value)
    parts.append(
        f'<line x1="{x0:.2f}" y1="{y0:.2f}" x2="{x1:.2f}" y2="{y0:.2f}" stroke="black"/>'
    )
    parts.append(
        f'<line x1="{x0:.2f}" y1="{y0:.2f}" x2="{x0:.2f}" y2="{y1:.2f}" stroke="black"/>'
    )
    parts.append(
        f'<text x="{(x0 + x1) / 2:.2f}" y="{HEIGHT - 10}" text-anchor="middle"'
        ' font-family="sans-serif" font-size="12">tick</text>'
    )
    parts.append(
        f'<text x="16" y="{(y0 + y1) / 2:.2f}" text-anchor="middle"'
        ' font-family="sans-serif" font-size="12"'
        f' transform="rotate(-90 16 {(y0 + y1) / 2:.2f})">count</text>'
    )

    # y tick labels (0, max) and x tick labels (1, max_tick)
    for value in (0, max_value):
        yy = _y(value, max_value)
        parts.append(
            f'<text x="{x0 - 6:.2f}" y="{yy + 4:.2f}" text-anchor="end"'
            f' font-family="sans-serif" font-size="11">{value}</text>'
        )
    for tick in (1, max_tick):
        xx = _x(tick, max_tick)
        parts.append(
            f'<text x="{xx:.2f}" y="{y0 + 16:.2f}" text-anchor="middle"'
            f' font-family="sans-serif" font-size="11">{tick}</text>'
        )

    for label, color, idx in _SERIES:
        points = " ".join(
            f"{_x(t, max_tick):.2f},{_y(row[idx], max_value):.2f}"
            for t, row in enumerate(series, start=1)
        )
        parts.append(
            f'<polyline points="{points}" fill="none" stroke="{color}" stroke-width="1.5"/>'
        )
        if len(series) == 1:
            xx = _x(1, max_tick)
            yy = _y(series[0][idx], max_value)
            parts.append(f'<circle cx="{xx:.2f}" cy="{yy:.2f}" r="3" fill="{color}"/>')

    # legend
    for i, (label, color, _) in enumerate(_SERIES):
        ly = MARGIN_TOP + 14 * i
        parts.append(
            f'<rect x="{WIDTH - 150}" y="{ly - 8}" width="10" height="10" fill="{color}"/>'
        )
        parts.append(
            f'<text x="{WIDTH - 136}" y="{ly + 1}" font-family="sans-serif"'
            f' font-size="11">{label}</text>'
        )

    parts.append("</svg>")
    return "\n".join(parts) + "\n"
