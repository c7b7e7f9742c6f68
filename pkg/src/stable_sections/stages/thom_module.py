"""Thom module stage - cohomology of the Thom spectrum as a Steenrod module."""

from stable_sections.models.pipeline import ComputationContext, StageResult
from stable_sections.pipeline.base import PipelineStage
from stable_sections.thom.module import build_thom_module, verify_module


class ThomModuleStage(PipelineStage):
    """Stage 2: Thom module.

    Builds H*(X^V; F2) from the ring and total class of stage 1 and checks
    the Adem relations before handing it on.
    """

    @property
    def name(self) -> str:
        return "thom_module"

    def execute(self, context: ComputationContext) -> StageResult:
        if context.ring is None or context.total_class is None:
            return StageResult(
                success=False,
                stage_name=self.name,
                duration_seconds=0,
                error_message="Characteristic classes have not been computed",
            )

        module = build_thom_module(context.ring, context.total_class, context.thom_degree)
        report = verify_module(module)
        if not report.ok:
            return StageResult(
                success=False,
                stage_name=self.name,
                duration_seconds=0,
                error_message="Adem relations fail: "
                + ", ".join(str(v) for v in report.violations),
            )
        context.module = module

        squares = ", ".join(f"Sq{k} from {t}" for (k, t) in sorted(module.actions)) or "none"
        return StageResult(
            success=True,
            stage_name=self.name,
            duration_seconds=0,
            warnings=[
                f"Module of dimension {module.total_dimension} in degrees "
                f"{module.d_min}..{module.d_max}; nonzero squares: {squares}",
                f"{report.relations_checked} Adem relations checked",
            ],
        )
