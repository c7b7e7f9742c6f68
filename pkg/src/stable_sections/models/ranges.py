"""Data models for stability ranges and stable rational cohomology."""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import ceil
from typing import Literal


@dataclass(frozen=True)
class RangeInput:
    """Numerical data of a jet-ampleness stability problem."""

    n: int  # complex dimension of X
    r: int  # jet order
    amp: int  # jet-ampleness level of E
    rk: int  # complex rank of J^r E
    codim: int  # real codimension of the Taylor condition in J^r E

    @property
    def e(self) -> int:
        """Excess codimension codim - 2n."""
        return self.codim - 2 * self.n

    @classmethod
    def line_bundle(cls, n: int, d: int, codim: int | None = None) -> "RangeInput":
        """J^1 of O(d) on an n-fold; the zero section by default."""
        return cls(n=n, r=1, amp=d, rk=n + 1, codim=2 * (n + 1) if codim is None else codim)

    @property
    def is_zero_section_line_case(self) -> bool:
        return self.r == 1 and self.rk == self.n + 1 and self.codim == 2 * (self.n + 1)


@dataclass(frozen=True)
class RangeReport:
    """Homological stability bounds; all ranges are "* < bound"."""

    big_n: int
    e: int
    bound_main: int
    bound_intro: Fraction
    bound_line_bundle: Fraction | None = None
    discrepancy: bool = False

    @property
    def max_degree(self) -> int:
        """Largest degree in the main range; negative means the range is empty."""
        return self.bound_main - 1

    @property
    def is_empty(self) -> bool:
        return self.max_degree < 0

    @property
    def line_bundle_max_degree(self) -> int | None:
        if self.bound_line_bundle is None:
            return None
        return ceil(self.bound_line_bundle) - 1

    def describe(self) -> str:
        if self.is_empty:
            return "empty range: no degrees"
        return f"iso in degrees * ≤ {self.max_degree}"


class Zone(str, Enum):
    """Support class of an E1 cell."""

    ALLOWED = "allowed"
    FORBIDDEN = "forbidden"
    LAST_COLUMN_VANISHING = "last_column_vanishing"
    OUTSIDE = "outside"


@dataclass(frozen=True)
class GeneratorRecord:
    """b free generators in one degree of a graded-commutative algebra."""

    degree: int
    count: int
    parity: Literal["exterior", "polynomial"]

    def eilenberg_maclane(self) -> str:
        return f"K(Q^{self.count}, {self.degree})" if self.count > 1 else f"K(Q, {self.degree})"


@dataclass
class PoincareSeries:
    """Graded dimensions c_0..c_max of a free graded-commutative algebra."""

    coefficients: list[int]
    generators: list[GeneratorRecord] = field(default_factory=list)

    @property
    def max_degree(self) -> int:
        return len(self.coefficients) - 1

    def total_dimension(self) -> int | None:
        """2^(number of exterior generators), or ``None`` if the algebra is infinite."""
        if any(g.parity == "polynomial" for g in self.generators):
            return None
        return 2 ** sum(g.count for g in self.generators)

    def lines(self) -> list[str]:
        return [f"{deg}: {dim}" for deg, dim in enumerate(self.coefficients)]
