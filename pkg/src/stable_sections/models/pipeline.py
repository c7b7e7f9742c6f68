"""Pipeline state models for Stable Sections.

These models track a computation as it moves from characteristic classes to
a Thom module, a resolution, an Adams chart and finally a verdict.
"""

from dataclasses import dataclass, field
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from stable_sections.algebra.charclasses import TotalClass
    from stable_sections.algebra.cohomology import TruncatedRing
    from stable_sections.ext.chart import ExtChart, PossibleDifferential
    from stable_sections.ext.resolution import Resolution
    from stable_sections.thom.module import SteenrodModule


@dataclass
class ComputationContext:
    """Mutable state passed through pipeline stages."""

    # Input
    n: int = 2
    d: int | None = None
    thom_degree: int = 2

    # Window
    max_s: int = 8
    max_t: int = 14
    report_max_s: int = 8
    stem: int = 3

    # Characteristic classes (stage 1)
    ring: "TruncatedRing | None" = None
    total_class: "TotalClass | None" = None

    # Module (stage 2), or supplied directly for the ext pipeline
    module: "SteenrodModule | None" = None

    # Resolution and chart (stage 3)
    resolution: "Resolution | None" = None
    chart: "ExtChart | None" = None

    # Verdict (stage 4)
    stem_dims: list[int | None] = field(default_factory=list)
    stem_total: int | None = None
    possible_differentials: "list[PossibleDifferential]" = field(default_factory=list)
    verdict: str | None = None


@dataclass
class StageResult:
    """Result of a pipeline stage execution."""

    success: bool
    stage_name: str
    duration_seconds: float
    error_message: str | None = None
    warnings: list[str] = field(default_factory=list)


@dataclass
class ComputationResult:
    """Final result of a complete pipeline run."""

    success: bool
    context: ComputationContext | None = None
    stages_completed: list[str] = field(default_factory=list)
    errors: list[str] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)
    total_duration: float = 0.0
