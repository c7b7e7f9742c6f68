"""Finite modules over the Steenrod algebra and Thom modules.

A module is stored degreewise: per-degree basis labels plus, for each square
Sq^k and source degree t, the F2 matrix of Sq^k from degree t to t + k with
shape (dim M^{t+k}, dim M^t). Only nonzero matrices are kept.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from stable_sections.algebra.charclasses import TotalClass
from stable_sections.algebra.cohomology import TruncatedRing, sq
from stable_sections.algebra.f2linalg import F2Matrix
from stable_sections.algebra.steenrod import (
    Monomial,
    SteenrodAlgebra,
    SteenrodElement,
    get_algebra,
    render_monomial,
)
from stable_sections.errors import DimensionMismatchError, InvalidInputError, RingMismatchError

ActionKey = tuple[int, int]


@dataclass(frozen=True)
class SteenrodModule:
    """A finite, degreewise-dense module over the mod 2 Steenrod algebra.

    Attributes:
        degree_range: Inclusive (d_min, d_max) window the module lives in.
        basis: Basis labels per degree; degrees without basis are omitted.
        actions: Nonzero Sq^k matrices keyed by (k, from_degree).
        truncated: True when degrees above d_max were cut off, so squares
            landing past d_max are unknown rather than zero.
    """

    degree_range: tuple[int, int]
    basis: dict[int, tuple[str, ...]] = field(default_factory=dict)
    actions: dict[ActionKey, F2Matrix] = field(default_factory=dict)
    truncated: bool = False

    def __post_init__(self) -> None:
        low, high = self.degree_range
        if low > high:
            raise InvalidInputError(f"Empty degree range {self.degree_range}")
        basis = {
            int(t): tuple(labels) for t, labels in sorted(self.basis.items()) if len(labels)
        }
        for t in basis:
            if not low <= t <= high:
                raise InvalidInputError(f"Basis in degree {t} outside {self.degree_range}")
        actions: dict[ActionKey, F2Matrix] = {}
        for (k, t), matrix in sorted(self.actions.items()):
            if k < 1:
                raise InvalidInputError(f"Action Sq^{k} must have k >= 1")
            expected = (len(basis.get(t + k, ())), len(basis.get(t, ())))
            if matrix.shape != expected:
                raise DimensionMismatchError(
                    f"Sq^{k} from degree {t} has shape {matrix.shape}, expected {expected}"
                )
            if not matrix.is_zero():
                actions[(k, t)] = matrix
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "actions", actions)

    @property
    def d_min(self) -> int:
        return self.degree_range[0]

    @property
    def d_max(self) -> int:
        return self.degree_range[1]

    def degrees(self) -> list[int]:
        return list(self.basis)

    def dim(self, t: int) -> int:
        return len(self.basis.get(t, ()))

    @property
    def total_dimension(self) -> int:
        return sum(len(labels) for labels in self.basis.values())

    def is_zero(self) -> bool:
        return not self.basis

    def action(self, k: int, t: int) -> F2Matrix:
        """Matrix of Sq^k from degree t; the identity for k = 0."""
        if k == 0:
            return F2Matrix.identity(self.dim(t))
        return self.actions.get((k, t), F2Matrix.zeros(self.dim(t + k), self.dim(t)))

    def apply_monomial(self, mono: Monomial, t: int) -> F2Matrix:
        """Matrix of Sq^{i1} ... Sq^{ik} from degree t; Sq^{ik} acts first."""
        result = F2Matrix.identity(self.dim(t))
        degree = t
        for i in reversed(mono):
            result = self.action(i, degree) @ result  # type: ignore[assignment]
            degree += i
        return result

    def apply_element(self, element: SteenrodElement, t: int) -> F2Matrix:
        result = F2Matrix.zeros(self.dim(t + element.degree), self.dim(t))
        for mono in element.terms:
            result = result + self.apply_monomial(mono, t)
        return result

    def with_action(self, k: int, t: int, matrix: F2Matrix) -> SteenrodModule:
        """Copy with the Sq^k matrix out of degree t replaced."""
        actions = dict(self.actions)
        actions[(k, t)] = matrix
        return SteenrodModule(self.degree_range, dict(self.basis), actions, self.truncated)


@dataclass(frozen=True)
class AdemViolation:
    """One Adem relation Sq^a Sq^b that fails on degree t."""

    a: int
    b: int
    degree: int

    @property
    def relation(self) -> str:
        return f"Sq{self.a} Sq{self.b}"

    def __str__(self) -> str:
        return f"{self.relation} fails on degree {self.degree}"


@dataclass
class ModuleReport:
    """Outcome of checking the Adem relations on a module."""

    relations_checked: int = 0
    violations: list[AdemViolation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_module(m: SteenrodModule, algebra: SteenrodAlgebra | None = None) -> ModuleReport:
    """Check Sq^a Sq^b against its admissible expansion for every a < 2b.

    Only composites whose intermediate and target degrees stay within
    d_max are compared.
    """
    algebra = algebra or get_algebra()
    report = ModuleReport()
    for t in m.degrees():
        span = m.d_max - t
        for b in range(1, span + 1):
            for a in range(1, min(2 * b, span - b + 1)):
                report.relations_checked += 1
                composite = m.action(a, t + b) @ m.action(b, t)
                expansion = m.apply_element(algebra.adem_reduce([a, b]), t)
                if composite != expansion:
                    report.violations.append(AdemViolation(a, b, t))
    return report


def _thom_label(variable: str, exponent: int) -> str:
    if exponent == 0:
        return "U"
    if exponent == 1:
        return f"{variable}U"
    return f"{variable}^{exponent}U"


def build_thom_module(ring: TruncatedRing, w: TotalClass, thom_degree: int) -> SteenrodModule:
    """H*(X^V) as a Steenrod module from H*(X) and w(V).

    The basis is y U for ring monomials y, in degree deg(y) + thom_degree, with
    Sq^k(y U) = sum over i + l = k of Sq^i(y) w_l U.
    """
    if w.ring != ring:
        raise RingMismatchError("Total class does not live in the given ring")
    if ring.field != "F2":
        raise InvalidInputError("Thom modules are built over F2")
    if thom_degree < 0:
        raise InvalidInputError(f"Thom class degree must be non-negative, got {thom_degree}")
    q = ring.generator_degree
    basis = {
        thom_degree + j * q: (_thom_label(ring.variable, j),) for j in range(ring.dimension)
    }
    actions: dict[ActionKey, F2Matrix] = {}
    for j in range(ring.dimension):
        y = ring.monomial(j)
        for k in range(1, ring.top_degree - j * q + 1):
            image = ring.zero()
            for i in range(k + 1):
                image = image + sq(i, y) * w.component(k - i)
            # one basis element per degree, so Sq^k is a 1x1 matrix
            if image:
                actions[(k, thom_degree + j * q)] = F2Matrix.from_rows([[1]])
    top = thom_degree + ring.top_degree
    return SteenrodModule((thom_degree, top), basis, actions, truncated=False)


def sphere_module() -> SteenrodModule:
    """F2 concentrated in degree 0, the cohomology of the sphere spectrum."""
    return SteenrodModule((0, 0), {0: ("1",)})


def free_module(top_degree: int, algebra: SteenrodAlgebra | None = None) -> SteenrodModule:
    """The Steenrod algebra itself on one generator, cut off above ``top_degree``."""
    algebra = algebra or get_algebra()
    basis = {n: tuple(algebra.basis(n)) for n in range(top_degree + 1)}
    actions: dict[ActionKey, F2Matrix] = {}
    for n, monos in basis.items():
        for k in range(1, top_degree - n + 1):
            targets = basis[n + k]
            index = {mono: i for i, mono in enumerate(targets)}
            dense = np.zeros((len(targets), len(monos)), dtype=np.uint8)
            for col, mono in enumerate(monos):
                for term in algebra.adem_reduce((k, *mono)).terms:
                    dense[index[term], col] = 1
            actions[(k, n)] = F2Matrix.from_dense(dense)
    labels = {n: tuple(render_monomial(m) for m in monos) for n, monos in basis.items()}
    return SteenrodModule((0, top_degree), labels, actions, truncated=True)
