"""ASCII and SVG pictures of a grid diagram, optionally with a grid state."""

from __future__ import annotations

import xml.etree.ElementTree as ET
from typing import Optional

from .grid import GridState, VertList, v_to_h
from .winding import planar_winding

CELL = 40


def render_ascii(v: VertList, state: Optional[GridState] = None) -> str:
    """A (2n+1)-line picture: lattice points '.', state points '*', X/O markers,
    '|' and '-' strokes (vertical strokes cross over horizontal ones)."""
    n = len(v)
    size = 2 * n + 1
    canvas = [[" "] * size for _ in range(size)]
    for i in range(0, size, 2):
        for j in range(0, size, 2):
            canvas[i][j] = "."
    for r, (a, b) in enumerate(v_to_h(v), 1):
        lo, hi = sorted((a, b))
        for x in range(2 * lo - 1, 2 * hi):
            canvas[2 * r - 1][x] = "-"
    for c, (t, h) in enumerate(v, 1):
        lo, hi = sorted((t, h))
        for y in range(2 * lo - 1, 2 * hi):
            canvas[y][2 * c - 1] = "|"
        canvas[2 * t - 1][2 * c - 1] = "O"
        canvas[2 * h - 1][2 * c - 1] = "X"
    if state is not None:
        for c, r in enumerate(state, 1):
            canvas[2 * (r - 1)][2 * (c - 1)] = "*"
    return "\n".join("".join(row).rstrip() for row in canvas) + "\n"


def render_svg(v: VertList, state: Optional[GridState] = None, winding: bool = False) -> str:
    n = len(v)
    pad = CELL // 2
    side = n * CELL + 2 * pad
    svg = ET.Element(
        "svg",
        xmlns="http://www.w3.org/2000/svg",
        version="1.1",
        width=str(side),
        height=str(side),
        viewBox=f"0 0 {side} {side}",
    )

    def px(k: float) -> str:
        return f"{pad + k * CELL:g}"

    grid = ET.SubElement(svg, "g", stroke="#cccccc", attrib={"stroke-width": "1"})
    for k in range(n + 1):
        ET.SubElement(grid, "line", x1=px(k), y1=px(0), x2=px(k), y2=px(n))
        ET.SubElement(grid, "line", x1=px(0), y1=px(k), x2=px(n), y2=px(k))
    if winding:
        full = planar_winding(v)
        nums = ET.SubElement(svg, "g", fill="#999999", attrib={"font-size": "10"})
        for i in range(n + 1):
            for j in range(n + 1):
                t = ET.SubElement(nums, "text", x=px(j + 0.08), y=px(i - 0.08))
                t.text = str(full[i][j])
    knot = ET.SubElement(svg, "g", stroke="black", attrib={"stroke-width": "2"})
    for r, (a, b) in enumerate(v_to_h(v), 1):
        ET.SubElement(knot, "line", x1=px(a - 0.5), y1=px(r - 0.5), x2=px(b - 0.5), y2=px(r - 0.5))
    for c, (t, h) in enumerate(v, 1):
        # white halo so vertical strands read as passing over
        ET.SubElement(
            knot, "line", x1=px(c - 0.5), y1=px(t - 0.5), x2=px(c - 0.5), y2=px(h - 0.5),
            stroke="white", attrib={"stroke-width": "6"},
        )
        ET.SubElement(knot, "line", x1=px(c - 0.5), y1=px(t - 0.5), x2=px(c - 0.5), y2=px(h - 0.5))
    marks = ET.SubElement(svg, "g", attrib={"font-size": "20", "text-anchor": "middle", "font-family": "sans-serif"})
    for c, (t, h) in enumerate(v, 1):
        for row, letter in ((t, "O"), (h, "X")):
            el = ET.SubElement(marks, "text", x=px(c - 0.5), y=px(row - 0.5 + 0.18), attrib={"class": f"marker {letter}"})
            el.text = letter
    if state is not None:
        dots = ET.SubElement(svg, "g", fill="#c0392b")
        for c, r in enumerate(state, 1):
            ET.SubElement(dots, "circle", cx=px(c - 1), cy=px(r - 1), r="5", attrib={"class": "state"})
    return ET.tostring(svg, encoding="unicode") + "\n"


def render(v: VertList, state: Optional[GridState] = None, fmt: str = "ascii", winding: bool = False) -> str:
    if fmt == "ascii":
        return render_ascii(v, state)
    if fmt == "svg":
        return render_svg(v, state, winding)
    raise ValueError(f"unknown format {fmt!r}")


def format_matrix(m) -> str:
    width = max(len(str(x)) for row in m for x in row)
    return "\n".join(" ".join(str(x).rjust(width) for x in row) for row in m)
