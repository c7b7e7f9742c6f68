"""CLI module for Stable Sections."""

from stable_sections.cli.main import main

__all__ = ["main"]
