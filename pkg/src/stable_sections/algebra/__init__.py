"""Algebraic kernels: F2 linear algebra, the Steenrod algebra, cohomology rings."""

from stable_sections.algebra.charclasses import (
    TotalClass,
    chern_jet1_line,
    cp1_sphere_bundle_trivial,
    invert_total,
    reduce_mod2,
    sw_virtual,
    total_class,
    virtual_class,
)
from stable_sections.algebra.cohomology import RingElement, TruncatedRing, cup, sq, total_sq
from stable_sections.algebra.f2linalg import EchelonBasis, F2Matrix, kernel_basis, rank, rref, solve
from stable_sections.algebra.steenrod import SteenrodAlgebra, SteenrodElement, get_algebra

__all__ = [
    "EchelonBasis",
    "F2Matrix",
    "RingElement",
    "SteenrodAlgebra",
    "SteenrodElement",
    "TotalClass",
    "TruncatedRing",
    "chern_jet1_line",
    "cp1_sphere_bundle_trivial",
    "cup",
    "get_algebra",
    "invert_total",
    "kernel_basis",
    "rank",
    "reduce_mod2",
    "rref",
    "solve",
    "sq",
    "sw_virtual",
    "total_class",
    "total_sq",
    "virtual_class",
]
