"""Deterministic SVG rendering of stitch charts."""

from __future__ import annotations

from .chart import StitchChart

__all__ = ["CELL", "chart_svg", "decoration_svg"]

CELL = 10  # SVG units per chart cell
MARGIN = 10
GAP = 20  # between the two faces of a decoration
GRID_STYLE = 'stroke="#c8c8c8" stroke-width="0.5"'
STITCH_STYLE = 'stroke="#1f1f7a" stroke-width="2" stroke-linecap="round"'


def _face(chart: StitchChart, x0: int, y0: int) -> list:
    n = chart.n
    size = n * CELL
    # chart y points up, SVG y points down
    def px(x, y):
        return x0 + x * CELL, y0 + size - y * CELL

    out = [f'<g {GRID_STYLE}>']
    for k in range(n + 1):
        out.append(f'<line x1="{x0 + k * CELL}" y1="{y0}" x2="{x0 + k * CELL}" y2="{y0 + size}"/>')
        out.append(f'<line x1="{x0}" y1="{y0 + k * CELL}" x2="{x0 + size}" y2="{y0 + k * CELL}"/>')
    out.append("</g>")
    out.append(f"<g {STITCH_STYLE}>")
    for x, y in sorted(chart.hseg, key=lambda p: (p[1], p[0])):
        (a, b), (c, d) = px(x, y), px(x + 1, y)
        out.append(f'<line x1="{a}" y1="{b}" x2="{c}" y2="{d}"/>')
    for x, y in sorted(chart.vseg):
        (a, b), (c, d) = px(x, y), px(x, y + 1)
        out.append(f'<line x1="{a}" y1="{b}" x2="{c}" y2="{d}"/>')
    out.append("</g>")
    return out


def _document(width: int, height: int, body: list) -> str:
    head = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]
    return "\n".join(head + body + ["</svg>"]) + "\n"


def chart_svg(chart: StitchChart) -> str:
    side = chart.n * CELL + 2 * MARGIN
    return _document(side, side, _face(chart, MARGIN, MARGIN))


def decoration_svg(decoration) -> str:
    """Top face on the left, bottom face on the right."""
    size = decoration.n * CELL
    width = 2 * size + 2 * MARGIN + GAP
    height = size + 2 * MARGIN
    body = _face(decoration.top, MARGIN, MARGIN) + _face(decoration.bottom, MARGIN + size + GAP, MARGIN)
    return _document(width, height, body)
