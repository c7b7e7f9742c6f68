"""Pipeline orchestrator for Stable Sections."""

import time

from rich.console import Console
from rich.markup import escape
from rich.progress import Progress, SpinnerColumn, TextColumn, TimeElapsedColumn

from stable_sections.config import Settings
from stable_sections.models.pipeline import ComputationContext, ComputationResult
from stable_sections.pipeline.base import PipelineStage

# stdout carries results only
console = Console(stderr=True)


class Pipeline:
    """Orchestrates the execution of pipeline stages."""

    def __init__(self, stages: list[PipelineStage], settings: Settings) -> None:
        """Initialize the pipeline.

        Args:
            stages: Ordered list of stages to execute.
            settings: Application settings.
        """
        self.stages = stages
        self.settings = settings

    def run(self, context: ComputationContext) -> ComputationResult:
        """Run every stage in order, stopping at the first failure.

        Args:
            context: Initial computation context.

        Returns:
            ComputationResult with success status, the final context and details.
        """
        start_time = time.perf_counter()
        result = ComputationResult(success=True, context=context)

        with Progress(
            SpinnerColumn(),
            TextColumn("[progress.description]{task.description}"),
            TimeElapsedColumn(),
            console=console,
            transient=True,
        ) as progress:
            for stage in self.stages:
                task = progress.add_task(f"[cyan]{stage.name}[/cyan]...", total=None)

                stage_result = stage.run(context)

                progress.remove_task(task)

                if stage_result.success:
                    result.stages_completed.append(stage.name)
                    result.warnings.extend(stage_result.warnings)
                    if self.settings.verbose:
                        console.print(
                            f"  [green]{stage.name}[/green] "
                            f"({stage_result.duration_seconds:.2f}s)"
                        )
                        for warning in stage_result.warnings:
                            console.print(f"    [yellow]{escape(warning)}[/yellow]")
                else:
                    result.success = False
                    result.errors.append(f"{stage.name}: {stage_result.error_message}")
                    message = escape(stage_result.error_message or "")
                    console.print(f"  [red]{stage.name}[/red] failed: {message}")
                    break

        result.total_duration = time.perf_counter() - start_time
        return result


def create_repro_pipeline(settings: Settings) -> Pipeline:
    """Characteristic class, Thom module, resolution and verdict for CP^n.

    Args:
        settings: Application settings.

    Returns:
        Configured Pipeline instance.
    """
    from stable_sections.stages import (
        CharacteristicClassStage,
        ExtComputationStage,
        ThomModuleStage,
        VerdictStage,
    )

    stages: list[PipelineStage] = [
        CharacteristicClassStage(),
        ThomModuleStage(),
        ExtComputationStage(settings),
        VerdictStage(),
    ]

    return Pipeline(stages, settings)


def create_ext_pipeline(settings: Settings) -> Pipeline:
    """Resolution and chart for a module already on the context.

    Args:
        settings: Application settings.

    Returns:
        Configured Pipeline instance with the Ext stage only.
    """
    from stable_sections.stages import ExtComputationStage

    stages: list[PipelineStage] = [ExtComputationStage(settings)]

    return Pipeline(stages, settings)
