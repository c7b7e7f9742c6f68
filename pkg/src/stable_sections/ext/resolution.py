"""Minimal free resolutions of finite Steenrod modules.

The resolution F_s -> ... -> F_0 -> M is built one stage at a time and, inside
a stage, one internal degree t at a time. In degree t the free module F_s has
basis pairs (generator, admissible monomial) ordered by generator index and then
by the algebra's monomial order. New generators complete the image of the
already-chosen ones to the kernel of the previous differential; the complement
is taken greedily along the kernel basis, so the result is deterministic.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass, field

import numpy as np

from stable_sections.algebra.f2linalg import EchelonBasis, F2Matrix, F2Vector, kernel_basis, rank
from stable_sections.algebra.steenrod import (
    Monomial,
    SteenrodAlgebra,
    SteenrodElement,
    get_algebra,
    render_monomial,
)
from stable_sections.errors import DegreeCapError, InvalidInputError
from stable_sections.thom.module import SteenrodModule, verify_module

FreeBasis = list[tuple[int, Monomial]]


@dataclass
class ResolutionStage:
    """Generators of F_s and their boundaries.

    Attributes:
        s: Homological degree.
        generator_degrees: Internal degree of each generator, non-decreasing.
        boundary: For s >= 1, one row per generator mapping previous-stage
            generator indices to the Steenrod element coefficient.
        augmentation: For s = 0, the image of each generator in the module.
    """

    s: int
    generator_degrees: list[int] = field(default_factory=list)
    boundary: list[dict[int, SteenrodElement]] = field(default_factory=list)
    augmentation: list[F2Vector] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.generator_degrees)

    def generators_in_degree(self, t: int) -> list[int]:
        return [g for g, deg in enumerate(self.generator_degrees) if deg == t]

    def entry(self, g: int, j: int) -> SteenrodElement:
        """Coefficient of previous-stage generator j in the boundary of generator g."""
        return self.boundary[g].get(j, SteenrodElement.zero())

    def describe(self, g: int) -> str:
        if self.s == 0:
            return f"g{g} -> {self.augmentation[g].tolist()}"
        terms = [
            f"{render_monomial(m)} g{j}" if m else f"g{j}"
            for j, element in sorted(self.boundary[g].items())
            for m in element.sorted_terms()
        ]
        return f"d(g{g}) = " + (" + ".join(terms) or "0")


@dataclass(frozen=True)
class StageViolation:
    s: int
    t: int
    message: str

    def __str__(self) -> str:
        return f"stage {self.s}, degree {self.t}: {self.message}"


class Resolution:
    """A minimal free resolution computed through (max_s, max_t)."""

    def __init__(
        self,
        module: SteenrodModule,
        max_s: int,
        max_t: int,
        algebra: SteenrodAlgebra,
    ) -> None:
        self.module = module
        self.max_s = max_s
        self.max_t = max_t
        self.algebra = algebra
        self.stages: list[ResolutionStage] = []

    def __len__(self) -> int:
        return len(self.stages)

    def __iter__(self) -> Iterator[ResolutionStage]:
        return iter(self.stages)

    def __getitem__(self, s: int) -> ResolutionStage:
        return self.stages[s]

    # -- free module bookkeeping -------------------------------------------

    def free_basis(self, s: int, t: int) -> FreeBasis:
        """Basis of F_s in internal degree t."""
        basis: FreeBasis = []
        for g, deg in enumerate(self.stages[s].generator_degrees):
            if deg <= t:
                basis.extend((g, mono) for mono in self.algebra.basis(t - deg))
        return basis

    def _target_dim(self, s: int, t: int) -> int:
        if s == 0:
            return self.module.dim(t)
        return len(self.free_basis(s - 1, t))

    def _image(
        self, s: int, g: int, mono: Monomial, index: dict[tuple[int, Monomial], int]
    ) -> F2Vector:
        """Sq^mono applied to the boundary of generator g of stage s."""
        stage = self.stages[s]
        deg = stage.generator_degrees[g]
        if s == 0:
            action = self.module.apply_monomial(mono, deg)
            return action @ stage.augmentation[g]  # type: ignore[return-value]
        column = np.zeros(len(index), dtype=np.uint8)
        left = SteenrodElement(sum(mono), frozenset({mono}))
        for j, coefficient in stage.boundary[g].items():
            for term in self.algebra.multiply(left, coefficient).terms:
                column[index[(j, term)]] ^= 1
        return column

    def _index(self, s: int, t: int) -> dict[tuple[int, Monomial], int]:
        if s == 0:
            return {}
        return {pair: i for i, pair in enumerate(self.free_basis(s - 1, t))}

    def differential(self, s: int, t: int) -> F2Matrix:
        """Matrix of d_s from F_s^t to F_{s-1}^t (to M^t when s = 0)."""
        source = self.free_basis(s, t)
        index = self._index(s, t)
        rows = self._target_dim(s, t)
        dense = np.zeros((rows, len(source)), dtype=np.uint8)
        for col, (g, mono) in enumerate(source):
            dense[:, col] = self._image(s, g, mono, index)
        return F2Matrix.from_dense(dense)

    def _decode(self, s: int, t: int, vector: F2Vector) -> dict[int, SteenrodElement]:
        """Split a vector of F_{s-1}^t into coefficients per generator."""
        stage = self.stages[s - 1]
        terms: dict[int, set[Monomial]] = {}
        for i, (j, mono) in enumerate(self.free_basis(s - 1, t)):
            if vector[i]:
                terms.setdefault(j, set()).add(mono)
        return {
            j: SteenrodElement(t - stage.generator_degrees[j], frozenset(monos))
            for j, monos in sorted(terms.items())
        }

    # -- construction ------------------------------------------------------

    def _extend_stage(self, s: int) -> None:
        stage = ResolutionStage(s)
        self.stages.append(stage)
        for t in range(self.module.d_min, self.max_t + 1):
            target_dim = self._target_dim(s, t)
            if target_dim == 0:
                continue
            if s == 0:
                to_cover = list(np.eye(target_dim, dtype=np.uint8))
            else:
                to_cover = kernel_basis(self.differential(s - 1, t))
            if not to_cover:
                continue
            image = EchelonBasis(target_dim, self.differential(s, t).to_dense().T)
            for vector in to_cover:
                if not image.add(vector):
                    continue
                stage.generator_degrees.append(t)
                if s == 0:
                    stage.augmentation.append(vector.astype(np.uint8))
                    stage.boundary.append({})
                else:
                    stage.boundary.append(self._decode(s, t, vector))

    def build(self) -> Resolution:
        for s in range(self.max_s + 1):
            self._extend_stage(s)
        return self

    # -- checks ------------------------------------------------------------

    def check_exactness(self) -> list[StageViolation]:
        """Image equals kernel at every computed spot, plus d o d = 0."""
        violations: list[StageViolation] = []
        for s in range(len(self.stages)):
            for t in range(self.module.d_min, self.max_t + 1):
                d_s = self.differential(s, t)
                if s == 0:
                    if rank(d_s) != self.module.dim(t):
                        violations.append(StageViolation(s, t, "augmentation is not onto"))
                    continue
                d_prev = self.differential(s - 1, t)
                if not (d_prev @ d_s).is_zero():  # type: ignore[union-attr]
                    violations.append(StageViolation(s, t, "d o d is nonzero"))
                kernel_dim = d_prev.cols - rank(d_prev)
                if rank(d_s) != kernel_dim:
                    violations.append(
                        StageViolation(s, t, f"image rank {rank(d_s)} != kernel dim {kernel_dim}")
                    )
        return violations

    def check_minimality(self) -> list[StageViolation]:
        """Boundaries must lie in the augmentation ideal: no unit coefficients."""
        violations: list[StageViolation] = []
        for stage in self.stages[1:]:
            for g, row in enumerate(stage.boundary):
                for j, element in row.items():
                    if element.coefficient(()):
                        violations.append(
                            StageViolation(
                                stage.s,
                                stage.generator_degrees[g],
                                f"generator g{g} hits g{j} with a unit coefficient",
                            )
                        )
        return violations


def resolve(
    m: SteenrodModule,
    max_s: int,
    max_t: int,
    algebra: SteenrodAlgebra | None = None,
) -> Resolution:
    """Minimal resolution of ``m`` through homological degree ``max_s`` and internal degree ``max_t``.

    For a truncated module the internal window is cut at the module's top degree.

    Raises:
        InvalidInputError: If the window is negative or ``m`` breaks an Adem relation.
        DegreeCapError: If the window needs algebra degrees beyond the cap.
    """
    algebra = algebra or get_algebra()
    if max_s < 0 or max_t < 0:
        raise InvalidInputError(f"Window bounds must be non-negative, got ({max_s}, {max_t})")
    if m.truncated:
        max_t = min(max_t, m.d_max)
    span = max_t - m.d_min
    if span > algebra.max_degree:
        raise DegreeCapError(
            f"Window up to t = {max_t} needs algebra degree {span}, cap is {algebra.max_degree}"
        )
    report = verify_module(m, algebra)
    if not report.ok:
        failing = ", ".join(str(v) for v in report.violations[:3])
        raise InvalidInputError(f"Module is not a Steenrod module: {failing}")
    return Resolution(m, max_s, max_t, algebra).build()
