"""Static SVG picture of wall loci in the (s, t) upper half plane."""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

from .lattice import Character, Surface
from .walls import Wall, numerical_wall

WIDTH = 640
HEIGHT = 400
MARGIN = 48


def _fmt(x: float) -> str:
    return f"{x:.3f}".rstrip("0").rstrip(".")


def render_walls_svg(surface: Surface, target: Character, walls: list[Wall]) -> str:
    """One arc per wall, drawn from the full circle locus of its first destabilizer.

    Window: s in [-c_v, c_v], t in (0, 1.2 * max t].  Circles leaving the window
    are clipped.
    """
    s_max = max(target.c, 1)
    t_top = 1.2 * max((math.sqrt(w.q0) for w in walls), default=1.0)
    plot_w = WIDTH - 2 * MARGIN
    plot_h = HEIGHT - 2 * MARGIN
    sx = plot_w / (2 * s_max)
    sy = plot_h / t_top

    def px(s: float) -> float:
        return MARGIN + (s + s_max) * sx

    def py(t: float) -> float:
        return HEIGHT - MARGIN - t * sy

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f"<title>{escape(f'walls for {target} on d = {surface.d}')}</title>",
        "<defs>",
        f'<clipPath id="plot"><rect x="{MARGIN}" y="{MARGIN}" width="{plot_w}" height="{plot_h}"/></clipPath>',
        "</defs>",
        f'<rect x="{MARGIN}" y="{MARGIN}" width="{plot_w}" height="{plot_h}" fill="none" stroke="#999"/>',
        # s-axis and the s = 0 slice
        f'<line class="axis" x1="{_fmt(px(-s_max))}" y1="{_fmt(py(0))}" x2="{_fmt(px(s_max))}" '
        f'y2="{_fmt(py(0))}" stroke="black"/>',
        f'<line class="s0" x1="{_fmt(px(0))}" y1="{_fmt(py(0))}" x2="{_fmt(px(0))}" y2="{_fmt(py(t_top))}" '
        'stroke="black" stroke-dasharray="4 3"/>',
        f'<text x="{_fmt(px(s_max) + 8)}" y="{_fmt(py(0) + 4)}" font-size="12">s</text>',
        f'<text x="{_fmt(px(0) + 6)}" y="{MARGIN - 8}" font-size="12">t (s = 0)</text>',
        f'<text x="{_fmt(px(-s_max))}" y="{_fmt(py(0) + 18)}" text-anchor="middle" font-size="12">{-s_max}</text>',
        f'<text x="{_fmt(px(0))}" y="{_fmt(py(0) + 18)}" text-anchor="middle" font-size="12">0</text>',
        f'<text x="{_fmt(px(s_max))}" y="{_fmt(py(0) + 18)}" text-anchor="middle" font-size="12">{s_max}</text>',
        '<g clip-path="url(#plot)" fill="none" stroke="#c0392b" stroke-width="1.5">',
    ]
    for wall in walls:
        locus = numerical_wall(surface, wall.destabilizers[0], target)
        center = float(locus.center)
        radius = math.sqrt(locus.radius_sq)
        rx, ry = radius * sx, radius * sy
        out.append(
            f'<path class="wall" data-q0="{wall.q0.numerator}/{wall.q0.denominator}" '
            f'd="M {_fmt(px(center - radius))} {_fmt(py(0))} '
            f'A {_fmt(rx)} {_fmt(ry)} 0 0 1 {_fmt(px(center + radius))} {_fmt(py(0))}"/>'
        )
    out.append("</g>")
    for wall in walls:
        t = math.sqrt(wall.q0)
        out.append(f'<circle cx="{_fmt(px(0))}" cy="{_fmt(py(t))}" r="2.5" fill="#c0392b"/>')
        out.append(
            f'<text x="{_fmt(px(0) + 6)}" y="{_fmt(py(t) - 4)}" font-size="11">'
            f"t^2 = {wall.q0}</text>"
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
