"""Stable Sections - computations around spaces of non-singular algebraic sections."""

__version__ = "0.1.0"
