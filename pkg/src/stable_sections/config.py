"""Configuration management for Stable Sections."""

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""

    model_config = SettingsConfigDict(
        env_prefix="STABLE_SECTIONS_",
        env_file=".env",
        env_file_encoding="utf-8",
    )

    # Steenrod algebra
    steenrod_degree_cap: int = Field(
        default=64,
        description="Largest internal degree the Steenrod algebra will work in",
    )

    # Adams window
    ext_max_s: int = Field(
        default=8,
        description="Default homological degree bound for Ext computations",
    )
    ext_max_t: int = Field(
        default=14,
        description="Default internal degree bound for Ext computations",
    )

    # Output
    chart_format: str = Field(
        default="ascii",
        description="Default chart format (ascii, svg, table)",
    )
    svg_cell_size: int = Field(
        default=40,
        description="Grid spacing of SVG charts in pixels",
    )
    verbose: bool = Field(
        default=False,
        description="Print per-stage diagnostics to stderr",
    )


# Global settings instance
_settings: Settings | None = None


def get_settings() -> Settings:
    """Get the global settings instance."""
    global _settings
    if _settings is None:
        _settings = Settings()
    return _settings


def configure(**overrides: object) -> Settings:
    """Configure settings with overrides. Useful for testing."""
    global _settings
    _settings = Settings(**overrides)  # type: ignore[arg-type]
    return _settings
