"""Steenrod modules of Thom spectra and their interchange format."""

from stable_sections.thom.interchange import (
    ActionRecord,
    ModuleDocument,
    parse_module,
    read_module,
    render_module,
    write_module,
)
from stable_sections.thom.module import (
    AdemViolation,
    ModuleReport,
    SteenrodModule,
    build_thom_module,
    free_module,
    sphere_module,
    verify_module,
)

__all__ = [
    "ActionRecord",
    "AdemViolation",
    "ModuleDocument",
    "ModuleReport",
    "SteenrodModule",
    "build_thom_module",
    "free_module",
    "parse_module",
    "read_module",
    "render_module",
    "sphere_module",
    "verify_module",
    "write_module",
]
