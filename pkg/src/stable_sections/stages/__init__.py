"""Pipeline stages for Stable Sections."""

from stable_sections.stages.characteristic_class import CharacteristicClassStage
from stable_sections.stages.ext_computation import ExtComputationStage
from stable_sections.stages.thom_module import ThomModuleStage
from stable_sections.stages.verdict import VerdictStage

__all__ = [
    "CharacteristicClassStage",
    "ExtComputationStage",
    "ThomModuleStage",
    "VerdictStage",
]
