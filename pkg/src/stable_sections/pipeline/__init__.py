"""Pipeline module for Stable Sections."""

from stable_sections.pipeline.base import PipelineStage
from stable_sections.pipeline.orchestrator import (
    Pipeline,
    create_ext_pipeline,
    create_repro_pipeline,
)

__all__ = ["Pipeline", "PipelineStage", "create_ext_pipeline", "create_repro_pipeline"]
