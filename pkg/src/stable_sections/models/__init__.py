"""Data models for Stable Sections."""

from stable_sections.models.pipeline import ComputationContext, ComputationResult, StageResult
from stable_sections.models.ranges import (
    GeneratorRecord,
    PoincareSeries,
    RangeInput,
    RangeReport,
    Zone,
)

__all__ = [
    "ComputationContext",
    "ComputationResult",
    "GeneratorRecord",
    "PoincareSeries",
    "RangeInput",
    "RangeReport",
    "StageResult",
    "Zone",
]
