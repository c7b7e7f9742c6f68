"""Ext computation stage - minimal resolution and Adams chart."""

from stable_sections.algebra.steenrod import SteenrodAlgebra
from stable_sections.config import Settings
from stable_sections.ext.chart import ext_chart
from stable_sections.ext.resolution import resolve
from stable_sections.models.pipeline import ComputationContext, StageResult
from stable_sections.pipeline.base import PipelineStage


class ExtComputationStage(PipelineStage):
    """Stage 3: Ext.

    Resolves the context's module through (max_s, max_t) and reads off the
    E2 chart. Exactness and minimality failures are reported as errors.
    """

    def __init__(self, settings: Settings) -> None:
        self.settings = settings

    @property
    def name(self) -> str:
        return "ext"

    def execute(self, context: ComputationContext) -> StageResult:
        if context.module is None:
            return StageResult(
                success=False,
                stage_name=self.name,
                duration_seconds=0,
                error_message="No module to resolve",
            )

        algebra = SteenrodAlgebra(self.settings.steenrod_degree_cap)
        resolution = resolve(context.module, context.max_s, context.max_t, algebra)

        problems = resolution.check_minimality()
        if self.settings.verbose:
            problems += resolution.check_exactness()
        if problems:
            return StageResult(
                success=False,
                stage_name=self.name,
                duration_seconds=0,
                error_message="; ".join(str(p) for p in problems),
            )

        context.resolution = resolution
        context.chart = ext_chart(resolution)

        warnings = [
            f"stage {stage.s}: generators in degrees {stage.generator_degrees}"
            for stage in resolution
            if len(stage)
        ]
        if resolution.max_t < context.max_t:
            warnings.append(
                f"Truncated module: window cut to t <= {resolution.max_t}"
            )
        return StageResult(
            success=True,
            stage_name=self.name,
            duration_seconds=0,
            warnings=warnings,
        )
