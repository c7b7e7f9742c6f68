"""Pytest fixtures for Stable Sections tests."""

from collections.abc import Iterator
from pathlib import Path

import numpy as np
import pytest

from stable_sections.algebra.charclasses import sw_virtual
from stable_sections.algebra.steenrod import SteenrodAlgebra
from stable_sections.config import Settings, configure
from stable_sections.thom.module import SteenrodModule, build_thom_module


@pytest.fixture(autouse=True)
def default_settings() -> Iterator[Settings]:
    """Fresh default settings for every test."""
    yield configure()
    configure()


@pytest.fixture
def algebra() -> SteenrodAlgebra:
    """Steenrod algebra with the default cap."""
    return SteenrodAlgebra(64)


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator for property checks."""
    return np.random.default_rng(20240917)


@pytest.fixture
def thom_even() -> SteenrodModule:
    """Thom module over CP^2 for even d (w = 1)."""
    w = sw_virtual(2, 6)
    return build_thom_module(w.ring, w, 2)


@pytest.fixture
def thom_odd() -> SteenrodModule:
    """Thom module over CP^2 for odd d (w = 1 + x)."""
    w = sw_virtual(2, 7)
    return build_thom_module(w.ring, w, 2)


@pytest.fixture
def temp_output_dir(tmp_path: Path) -> Path:
    """Return a temporary output directory."""
    output_dir = tmp_path / "output"
    output_dir.mkdir()
    return output_dir
