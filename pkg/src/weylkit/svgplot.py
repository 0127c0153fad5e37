"""Minimal SVG rendering of Newton polygons and their roofs.

The output is a static document in lattice coordinates (y flipped so the
origin sits bottom-left): a unit grid, the polygon as a path with id
"ntp-hull", the roof as a polyline with id "ntp-roof", and a labeled dot
per support point.  The byte output is deterministic for a given element.
"""

from __future__ import annotations

from .geometry import ntp, roof
from .weyl import WeylElement

__all__ = ["ntp_svg"]


def _fy(y: int) -> int:
    # lattice y-axis points up; SVG's points down
    return -y


def ntp_svg(z: WeylElement) -> str:
    polygon = ntp(z)
    chain_points: tuple = ()
    if not z.is_zero():
        chain_points = roof(z).points
    support = sorted(z.support())
    everything = set(polygon.vertices) | set(chain_points) | set(support)
    max_x = max((x for x, _ in everything), default=1)
    max_y = max((y for _, y in everything), default=1)
    max_x, max_y = max(max_x, 1), max(max_y, 1)

    lines = [
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="-1 {_fy(max_y) - 1} {max_x + 2} {max_y + 2}">',
        '<g id="grid" stroke="#ccc" stroke-width="0.02">',
    ]
    for x in range(0, max_x + 1):
        lines.append(f'<line x1="{x}" y1="{_fy(0)}" x2="{x}" y2="{_fy(max_y)}"/>')
    for y in range(0, max_y + 1):
        lines.append(f'<line x1="0" y1="{_fy(y)}" x2="{max_x}" y2="{_fy(y)}"/>')
    lines.append("</g>")

    if polygon.vertices:
        steps = [f"M {polygon.vertices[0][0]} {_fy(polygon.vertices[0][1])}"]
        steps += [f"L {x} {_fy(y)}" for x, y in polygon.vertices[1:]]
        hull_d = " ".join(steps) + " Z"
    else:
        hull_d = ""
    lines.append(f'<path id="ntp-hull" d="{hull_d}" fill="#dce8f5" '
                 'stroke="#336" stroke-width="0.05"/>')

    roof_pts = " ".join(f"{x},{_fy(y)}" for x, y in chain_points)
    lines.append(f'<polyline id="ntp-roof" points="{roof_pts}" fill="none" '
                 'stroke="#c33" stroke-width="0.08"/>')

    lines.append('<g id="support" font-size="0.3" font-family="monospace">')
    for x, y in support:
        lines.append(f'<circle cx="{x}" cy="{_fy(y)}" r="0.08" fill="#000"/>')
        lines.append(f'<text x="{x + 0.12}" y="{_fy(y) - 0.12}">({x},{y})</text>')
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
