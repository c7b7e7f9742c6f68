"""Text and SVG renderings of Adams charts.

Both formats use the Adams grading: stem t - s runs left to right, filtration
s bottom to top, one dot per Ext generator, vertical segments for h0.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET
from typing import Literal

from stable_sections.config import get_settings
from stable_sections.errors import InvalidInputError
from stable_sections.ext.chart import Cell, ExtChart, GeneratorId, export_table

ChartFormat = Literal["ascii", "svg", "table"]

_CELL_WIDTH = 3
_SVG_NS = "http://www.w3.org/2000/svg"


def _h0_cells(chart: ExtChart) -> set[Cell]:
    return {(source[0], chart.generators[source]) for source, _ in chart.h0}


def _ascii_symbol(dim: int | None) -> str:
    if dim is None:
        return " "
    if dim == 0:
        return "."
    return str(dim) if dim < 10 else "+"


def _render_ascii(chart: ExtChart) -> str:
    stems = list(chart.stems())
    h0_cells = _h0_cells(chart)
    lines = [" s"]
    for s in range(chart.max_s, -1, -1):
        row = "".join(_ascii_symbol(chart.dim(s, s + stem)).rjust(_CELL_WIDTH) for stem in stems)
        lines.append(f"{s:>2} |{row}".rstrip())
        if s > 0:
            bars = "".join(
                ("|" if (s - 1, s - 1 + stem) in h0_cells else "").rjust(_CELL_WIDTH)
                for stem in stems
            )
            lines.append(f"   |{bars}".rstrip())
    lines.append("   +" + "-" * (_CELL_WIDTH * len(stems)))
    lines.append("    " + "".join(str(stem).rjust(_CELL_WIDTH) for stem in stems))
    lines.append("    " + "t-s".rjust(_CELL_WIDTH * len(stems)))
    return "\n".join(lines) + "\n"


def _fmt(value: float) -> str:
    return f"{value:g}"


class _SvgCanvas:
    """Coordinate bookkeeping for one chart."""

    def __init__(self, chart: ExtChart, cell: int) -> None:
        self.chart = chart
        self.cell = cell
        self.margin = cell
        self.columns = len(chart.stems())
        self.rows = chart.max_s + 1
        self.width = 2 * self.margin + self.columns * cell
        self.height = 2 * self.margin + self.rows * cell

    def x(self, stem: float) -> float:
        return self.margin + (stem + 0.5) * self.cell

    def y(self, s: float) -> float:
        return self.height - self.margin - (s + 0.5) * self.cell

    def dot_position(self, generator: GeneratorId) -> tuple[float, float]:
        s = generator[0]
        t = self.chart.generators[generator]
        peers = self.chart.cell_generators(s, t)
        offset = peers.index(generator) - (len(peers) - 1) / 2
        return self.x(t - s) + offset * self.cell * 0.22, self.y(s)


def _render_svg(chart: ExtChart, cell_size: int) -> str:
    canvas = _SvgCanvas(chart, cell_size)
    root = ET.Element(
        "svg",
        {
            "xmlns": _SVG_NS,
            "version": "1.1",
            "width": str(canvas.width),
            "height": str(canvas.height),
            "viewBox": f"0 0 {canvas.width} {canvas.height}",
        },
    )
    ET.SubElement(
        root, "rect", {"x": "0", "y": "0", "width": "100%", "height": "100%", "fill": "white"}
    )

    grid = ET.SubElement(root, "g", {"stroke": "#dddddd", "stroke-width": "1"})
    shade = ET.SubElement(root, "g", {"fill": "#f0f0f0"})
    for stem in chart.stems():
        for s in range(canvas.rows):
            if chart.dim(s, s + stem) is None:
                ET.SubElement(
                    shade,
                    "rect",
                    {
                        "x": _fmt(canvas.x(stem) - cell_size / 2),
                        "y": _fmt(canvas.y(s) - cell_size / 2),
                        "width": str(cell_size),
                        "height": str(cell_size),
                    },
                )
    for col in range(canvas.columns + 1):
        x = _fmt(canvas.margin + col * cell_size)
        ET.SubElement(
            grid,
            "line",
            {"x1": x, "y1": _fmt(canvas.margin), "x2": x, "y2": _fmt(canvas.height - canvas.margin)},
        )
    for row in range(canvas.rows + 1):
        y = _fmt(canvas.margin + row * cell_size)
        ET.SubElement(
            grid,
            "line",
            {"x1": _fmt(canvas.margin), "y1": y, "x2": _fmt(canvas.width - canvas.margin), "y2": y},
        )

    labels = ET.SubElement(
        root, "g", {"font-family": "monospace", "font-size": _fmt(cell_size * 0.3), "fill": "black"}
    )
    for stem in chart.stems():
        text = ET.SubElement(
            labels,
            "text",
            {
                "x": _fmt(canvas.x(stem)),
                "y": _fmt(canvas.height - canvas.margin / 2),
                "text-anchor": "middle",
            },
        )
        text.text = str(stem)
    for s in range(canvas.rows):
        text = ET.SubElement(
            labels,
            "text",
            {"x": _fmt(canvas.margin / 2), "y": _fmt(canvas.y(s)), "text-anchor": "middle"},
        )
        text.text = str(s)

    lines = ET.SubElement(root, "g", {"stroke": "black", "stroke-width": _fmt(cell_size / 20)})
    for source, target in sorted(chart.h0):
        x1, y1 = canvas.dot_position(source)
        x2, y2 = canvas.dot_position(target)
        ET.SubElement(lines, "line", {"x1": _fmt(x1), "y1": _fmt(y1), "x2": _fmt(x2), "y2": _fmt(y2)})

    dots = ET.SubElement(root, "g", {"fill": "black"})
    for generator in sorted(chart.generators):
        cx, cy = canvas.dot_position(generator)
        ET.SubElement(
            dots, "circle", {"cx": _fmt(cx), "cy": _fmt(cy), "r": _fmt(cell_size * 0.08)}
        )

    body = ET.tostring(root, encoding="unicode")
    return '<?xml version="1.0" encoding="UTF-8"?>\n' + body + "\n"


def render_chart(chart: ExtChart, fmt: str = "ascii", cell_size: int | None = None) -> str:
    """Render a chart as an ASCII grid, an SVG 1.1 document or an "s t dim" table.

    Args:
        chart: Chart to draw.
        fmt: One of ``ascii``, ``svg`` or ``table``.
        cell_size: SVG grid spacing; defaults to the configured value.

    Returns:
        The document text. Rendering is deterministic.

    Raises:
        InvalidInputError: If the format is unknown.
    """
    if fmt == "ascii":
        return _render_ascii(chart)
    if fmt == "svg":
        return _render_svg(chart, cell_size or get_settings().svg_cell_size)
    if fmt == "table":
        return export_table(chart)
    raise InvalidInputError(f"Unknown chart format {fmt!r}; expected ascii, svg or table")
