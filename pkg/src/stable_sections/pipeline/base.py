"""Base classes for pipeline stages."""

import time
from abc import ABC, abstractmethod

from stable_sections.errors import StableSectionsError
from stable_sections.models.pipeline import ComputationContext, StageResult


class PipelineStage(ABC):
    """Abstract base class for pipeline stages.

    Each stage implements execute() which receives a ComputationContext,
    performs its work (mutating the context), and returns a StageResult.
    """

    @property
    @abstractmethod
    def name(self) -> str:
        """Unique name for this stage."""
        ...

    @abstractmethod
    def execute(self, context: ComputationContext) -> StageResult:
        """Execute this stage.

        Args:
            context: Mutable computation context that accumulates results.

        Returns:
            StageResult indicating success/failure and any warnings.
        """
        ...

    def run(self, context: ComputationContext) -> StageResult:
        """Run the stage with timing.

        Domain errors become failed results carrying their message; anything
        else is reported as unexpected.
        """
        start_time = time.perf_counter()
        try:
            result = self.execute(context)
        except StableSectionsError as e:
            return StageResult(
                success=False,
                stage_name=self.name,
                duration_seconds=time.perf_counter() - start_time,
                error_message=str(e),
            )
        except Exception as e:
            return StageResult(
                success=False,
                stage_name=self.name,
                duration_seconds=time.perf_counter() - start_time,
                error_message=f"Unexpected error: {e}",
            )
        result.duration_seconds = time.perf_counter() - start_time
        return result
