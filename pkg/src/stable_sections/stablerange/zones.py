"""Support and vanishing zones of the first page of the stability spectral sequence.

The spectral sequence lives in the second quadrant, s <= -1 and t >= 0, with
columns s >= -N-2. Column s with -N-1 <= s <= -1 can only be nonzero for
|s| e <= t <= 2 |s| rk, and the last column s = -N-2 vanishes below
t = N e + e.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET

from stable_sections.errors import InvalidInputError
from stable_sections.models.ranges import RangeInput, Zone
from stable_sections.stablerange.bounds import big_n, stability_bound

ZONE_SYMBOLS = {
    Zone.ALLOWED: "#",
    Zone.FORBIDDEN: " ",
    Zone.LAST_COLUMN_VANISHING: "-",
    Zone.OUTSIDE: "?",
}

ZONE_COLORS = {
    Zone.ALLOWED: "#5b8fd6",
    Zone.FORBIDDEN: "#ffffff",
    Zone.LAST_COLUMN_VANISHING: "#c8c8c8",
    Zone.OUTSIDE: "#f4e1a1",
}

NO_COLUMNS_MESSAGE = "N < 0: the spectral sequence has no stable columns"

_LEGEND = "# possibly nonzero   - vanishing (last column)   blank: zero"
_SCHEMATIC_NOTE = (
    "note: cells use the exact exponent bound t >= |s|e; a schematic drawing that "
    "shades t > 2|s| - 2 is one degree more generous"
)


def e1_support(s: int, t: int, inp: RangeInput) -> Zone:
    """Classify cell (s, t).

    Raises:
        InvalidInputError: If (s, t) is not in the second quadrant or e < 2.
    """
    if s >= 0 or t < 0:
        raise InvalidInputError(f"Cell ({s}, {t}) is outside the second quadrant")
    e = inp.e
    if e < 2:
        raise InvalidInputError(f"Excess codimension {e} < 2")
    n_value = big_n(inp.amp, inp.r)
    if n_value < 0:
        return Zone.OUTSIDE
    if s <= -n_value - 3:
        return Zone.FORBIDDEN
    if s == -n_value - 2:
        return Zone.LAST_COLUMN_VANISHING if t < n_value * e + e else Zone.ALLOWED
    width = -s
    if width * e <= t <= 2 * width * inp.rk:
        return Zone.ALLOWED
    return Zone.FORBIDDEN


def e1_differential_target(s: int, t: int, r: int) -> tuple[int, int]:
    """Bidegree hit by d^r from (s, t)."""
    if r < 1:
        raise InvalidInputError(f"Differential index must be at least 1, got {r}")
    return (s - r, t + r - 1)


def zone_input(big_n_value: int, e: int, rk: int = 2) -> RangeInput:
    """A line-bundle style input on a curve realising a given N and e."""
    if big_n_value < -1:
        raise InvalidInputError(f"N must be at least -1, got {big_n_value}")
    # amp = 0 gives N = -1 on a curve
    return RangeInput(n=1, r=1, amp=max(0, 2 * big_n_value + 1), rk=rk, codim=e + 2)


def _columns(inp: RangeInput) -> list[int]:
    n_value = big_n(inp.amp, inp.r)
    return list(range(-n_value - 3, 0))


def _render_ascii(inp: RangeInput, t_max: int) -> str:
    columns = _columns(inp)
    lines = [" t"]
    for t in range(t_max, -1, -1):
        row = "".join(f" {ZONE_SYMBOLS[e1_support(s, t, inp)]} " for s in columns)
        lines.append(f"{t:>2} |{row}".rstrip())
    lines.append("   +" + "-" * (3 * len(columns)))
    lines.append("    " + "".join(f"{s:>3}" for s in columns))
    lines.append("    " + "s".rjust(3 * len(columns)))
    report = stability_bound(inp)
    lines.append(f"N = {report.big_n}, e = {report.e}; {report.describe()}")
    lines.append(_LEGEND)
    lines.append(_SCHEMATIC_NOTE)
    return "\n".join(lines) + "\n"


def _render_svg(inp: RangeInput, t_max: int, cell: int) -> str:
    columns = _columns(inp)
    width = (len(columns) + 2) * cell
    height = (t_max + 3) * cell
    root = ET.Element(
        "svg",
        {
            "xmlns": "http://www.w3.org/2000/svg",
            "version": "1.1",
            "width": str(width),
            "height": str(height),
            "viewBox": f"0 0 {width} {height}",
        },
    )
    cells = ET.SubElement(root, "g", {"stroke": "#999999", "stroke-width": "1"})
    labels = ET.SubElement(
        root, "g", {"font-family": "monospace", "font-size": str(cell // 3), "text-anchor": "middle"}
    )
    for col, s in enumerate(columns):
        x = (col + 1) * cell
        for t in range(t_max + 1):
            y = (t_max - t + 1) * cell
            zone = e1_support(s, t, inp)
            ET.SubElement(
                cells,
                "rect",
                {
                    "x": str(x),
                    "y": str(y),
                    "width": str(cell),
                    "height": str(cell),
                    "fill": ZONE_COLORS[zone],
                    "data-zone": zone.value,
                },
            )
        text = ET.SubElement(labels, "text", {"x": str(x + cell // 2), "y": str(height - cell // 3)})
        text.text = str(s)
    for t in range(t_max + 1):
        y = (t_max - t + 1) * cell + cell // 2
        text = ET.SubElement(labels, "text", {"x": str(cell // 2), "y": str(y)})
        text.text = str(t)
    return '<?xml version="1.0" encoding="UTF-8"?>\n' + ET.tostring(root, encoding="unicode") + "\n"


def _render_svg_message(message: str, cell: int) -> str:
    width = len(message) * cell // 3
    height = 2 * cell
    root = ET.Element(
        "svg",
        {
            "xmlns": "http://www.w3.org/2000/svg",
            "version": "1.1",
            "width": str(width),
            "height": str(height),
            "viewBox": f"0 0 {width} {height}",
        },
    )
    text = ET.SubElement(
        root,
        "text",
        {"x": str(cell // 2), "y": str(cell), "font-family": "monospace", "font-size": str(cell // 3)},
    )
    text.text = message
    return '<?xml version="1.0" encoding="UTF-8"?>\n' + ET.tostring(root, encoding="unicode") + "\n"


def render_e1_zones(
    inp: RangeInput, t_max: int, fmt: str = "ascii", cell_size: int = 40
) -> str:
    """Grid of e1_support over the columns -N-3..-1 and rows 0..t_max.

    Raises:
        InvalidInputError: On negative t_max, an unknown format or e < 2.
    """
    if t_max < 0:
        raise InvalidInputError(f"t_max must be non-negative, got {t_max}")
    if inp.e < 2:
        raise InvalidInputError(f"Excess codimension {inp.e} < 2")
    if fmt not in ("ascii", "svg"):
        raise InvalidInputError(f"Unknown format {fmt!r}; expected ascii or svg")
    if big_n(inp.amp, inp.r) < 0:
        if fmt == "svg":
            return _render_svg_message(NO_COLUMNS_MESSAGE, cell_size)
        return NO_COLUMNS_MESSAGE + "\n"
    if fmt == "ascii":
        return _render_ascii(inp, t_max)
    return _render_svg(inp, t_max, cell_size)
