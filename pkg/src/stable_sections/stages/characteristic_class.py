"""Characteristic class stage - total Stiefel-Whitney class of J^1 O(d) - T CP^n."""

from stable_sections.algebra.charclasses import sw_virtual
from stable_sections.models.pipeline import ComputationContext, StageResult
from stable_sections.pipeline.base import PipelineStage


class CharacteristicClassStage(PipelineStage):
    """Stage 1: Characteristic classes.

    Computes w(J^1 O(d) - T CP^n) in F2[x]/(x^{n+1}) and stores the ring and
    the class on the context.
    """

    @property
    def name(self) -> str:
        return "characteristic_class"

    def execute(self, context: ComputationContext) -> StageResult:
        if context.d is None:
            return StageResult(
                success=False,
                stage_name=self.name,
                duration_seconds=0,
                error_message="No twist d given",
            )

        w = sw_virtual(context.n, context.d)
        context.ring = w.ring
        context.total_class = w

        return StageResult(
            success=True,
            stage_name=self.name,
            duration_seconds=0,
            warnings=[f"w(J^1 O({context.d}) - T CP^{context.n}) = {w}"],
        )
