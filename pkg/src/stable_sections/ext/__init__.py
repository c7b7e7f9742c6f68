"""Ext over the Steenrod algebra: resolutions, charts and their renderings."""

from stable_sections.ext.chart import (
    ExtChart,
    PossibleDifferential,
    differential_report,
    export_table,
    ext_chart,
    stem_dims,
    stem_total,
)
from stable_sections.ext.render import render_chart
from stable_sections.ext.resolution import Resolution, ResolutionStage, StageViolation, resolve

__all__ = [
    "ExtChart",
    "PossibleDifferential",
    "Resolution",
    "ResolutionStage",
    "StageViolation",
    "differential_report",
    "export_table",
    "ext_chart",
    "render_chart",
    "resolve",
    "stem_dims",
    "stem_total",
]
