"""Adams E2 charts read off a minimal resolution."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from stable_sections.algebra.f2linalg import F2Matrix, rank
from stable_sections.errors import InvalidInputError
from stable_sections.ext.resolution import Resolution

GeneratorId = tuple[int, int]
Cell = tuple[int, int]


@dataclass
class ExtChart:
    """Dimensions of Ext^{s,t} in a window, with h0 multiplications.

    Attributes:
        max_s: Largest homological degree computed.
        max_t: Largest internal degree computed.
        generators: Internal degree of each generator (s, index).
        h0: Pairs ((s, j), (s + 1, k)) with h0 * g_j having a g_k component.
    """

    max_s: int
    max_t: int
    generators: dict[GeneratorId, int] = field(default_factory=dict)
    h0: set[tuple[GeneratorId, GeneratorId]] = field(default_factory=set)

    def in_window(self, s: int, t: int) -> bool:
        return 0 <= s <= self.max_s and t <= self.max_t

    def cell_generators(self, s: int, t: int) -> list[GeneratorId]:
        return sorted(g for g, deg in self.generators.items() if g[0] == s and deg == t)

    def dim(self, s: int, t: int) -> int | None:
        """dim Ext^{s,t}, or ``None`` outside the computed window."""
        if not self.in_window(s, t):
            return None
        return len(self.cell_generators(s, t))

    def cells(self) -> dict[Cell, int]:
        """Nonzero cells (s, t) -> dimension, sorted."""
        counts: dict[Cell, int] = {}
        for (s, _), t in sorted(self.generators.items()):
            counts[(s, t)] = counts.get((s, t), 0) + 1
        return dict(sorted(counts.items()))

    def h0_targets(self, generator: GeneratorId) -> list[GeneratorId]:
        return sorted(target for source, target in self.h0 if source == generator)

    def h0_matrix(self, s: int, t: int) -> F2Matrix | None:
        """h0 from (s, t) to (s + 1, t + 1); ``None`` when the target is outside the window."""
        if not self.in_window(s + 1, t + 1):
            return None
        sources = self.cell_generators(s, t)
        targets = self.cell_generators(s + 1, t + 1)
        dense = np.zeros((len(targets), len(sources)), dtype=np.uint8)
        for col, source in enumerate(sources):
            for row, target in enumerate(targets):
                dense[row, col] = (source, target) in self.h0
        return F2Matrix.from_dense(dense)

    def stems(self) -> range:
        return range(0, self.max_t + 1)


def ext_chart(res: Resolution) -> ExtChart:
    """Chart of a minimal resolution: one class per generator, h0 from Sq^1 coefficients."""
    chart = ExtChart(max_s=res.max_s, max_t=res.max_t)
    for stage in res:
        for g, t in enumerate(stage.generator_degrees):
            chart.generators[(stage.s, g)] = t
        if stage.s == 0:
            continue
        for g, row in enumerate(stage.boundary):
            for j, coefficient in row.items():
                if coefficient.coefficient((1,)):
                    chart.h0.add(((stage.s - 1, j), (stage.s, g)))
    return chart


def stem_dims(chart: ExtChart, stem: int, max_s: int | None = None) -> list[int | None]:
    """[dim Ext^{s, s+stem} for s = 0..max_s]; cells past max_t are ``None``.

    Raises:
        InvalidInputError: If no cell of the stem lies in the window.
    """
    top = chart.max_s if max_s is None else min(max_s, chart.max_s)
    if stem > chart.max_t or stem < -top:
        raise InvalidInputError(f"Stem {stem} is outside the window t <= {chart.max_t}")
    return [chart.dim(s, s + stem) for s in range(top + 1)]


def stem_total(chart: ExtChart, stem: int, max_s: int | None = None) -> int:
    """Total dimension of the stem over the cells inside the window."""
    return sum(d for d in stem_dims(chart, stem, max_s) if d is not None)


@dataclass(frozen=True)
class PossibleDifferential:
    """An Adams d_r between two nonzero cells that h0-linearity does not rule out."""

    r: int
    source: Cell
    target: Cell

    def __str__(self) -> str:
        (s, t), (s2, t2) = self.source, self.target
        return f"d{self.r}: (stem {t - s}, s={s}) -> (stem {t2 - s2}, s={s2})"


def _h0_injective(chart: ExtChart, s: int, t: int) -> bool | None:
    matrix = chart.h0_matrix(s, t)
    if matrix is None:
        return None
    return rank(matrix) == matrix.cols


def _h0_vanishes(chart: ExtChart, s: int, t: int) -> bool | None:
    matrix = chart.h0_matrix(s, t)
    if matrix is None:
        return None
    return matrix.is_zero()


def differential_report(
    chart: ExtChart, stem: int, max_s: int | None = None
) -> list[PossibleDifferential]:
    """Adams differentials into or out of ``stem`` that the window cannot exclude.

    d_r goes from (s, t) to (s + r, t + r - 1). A candidate with nonzero source
    and target is dropped when h0 kills the source and acts injectively on the
    target. Sources and targets are restricted to rows s <= max_s; h0 must be
    known on every target, so max_s must stay below the chart's top row.
    """
    rows = chart.max_s - 1 if max_s is None else max_s
    if rows >= chart.max_s:
        raise InvalidInputError(
            f"Report rows up to {rows} need h0 on row {rows + 1}, chart stops at {chart.max_s}"
        )
    found: list[PossibleDifferential] = []
    for source_stem in (stem, stem + 1):
        for s in range(rows + 1):
            t = s + source_stem
            if not chart.dim(s, t):
                continue
            for r in range(2, rows - s + 1):
                target = (s + r, t + r - 1)
                if not chart.dim(*target):
                    continue
                vanishes = _h0_vanishes(chart, s, t)
                injective = _h0_injective(chart, *target)
                if vanishes and injective:
                    continue
                found.append(PossibleDifferential(r, (s, t), target))
    return found


def export_table(chart: ExtChart) -> str:
    """One "s t dim" line per nonzero cell."""
    return "".join(f"{s} {t} {dim}\n" for (s, t), dim in chart.cells().items())
