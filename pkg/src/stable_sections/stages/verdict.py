"""Verdict stage - reads the stem off the chart and decides what the window proves."""

from stable_sections.ext.chart import differential_report, stem_dims
from stable_sections.models.pipeline import ComputationContext, StageResult
from stable_sections.pipeline.base import PipelineStage


class VerdictStage(PipelineStage):
    """Stage 4: Verdict.

    "0" when the stem is empty in the window, "Z/2" when it holds a single
    class and no Adams differential into or out of it survives the
    sparseness check, "inconclusive" otherwise.
    """

    @property
    def name(self) -> str:
        return "verdict"

    def execute(self, context: ComputationContext) -> StageResult:
        if context.chart is None:
            return StageResult(
                success=False,
                stage_name=self.name,
                duration_seconds=0,
                error_message="No chart to read",
            )

        dims = stem_dims(context.chart, context.stem, context.report_max_s)
        total = sum(d for d in dims if d is not None)
        possible = differential_report(context.chart, context.stem, context.report_max_s)

        context.stem_dims = dims
        context.stem_total = total
        context.possible_differentials = possible

        if total == 0:
            context.verdict = "0"
        elif total == 1 and not possible:
            context.verdict = "Z/2"
        else:
            context.verdict = "inconclusive"

        warnings = [f"stem {context.stem} dims by s: {dims}"]
        warnings.extend(f"possible {p}" for p in possible)
        if None in dims:
            warnings.append("Some cells of the stem lie outside the window")
        return StageResult(
            success=True,
            stage_name=self.name,
            duration_seconds=0,
            warnings=warnings,
        )
