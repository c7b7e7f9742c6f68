"""Characteristic classes of first jet bundles on projective spaces.

J^1 O(d) on CP^n splits as O(d-1)^{n+1}, so its total Chern class is
(1 + (d-1)h)^{n+1}. With c(T CP^n) = (1+h)^{n+1}, the virtual bundle
J^1 O(d) - T CP^n has total Stiefel-Whitney class

    w = (1 + (d-1)x)^{n+1} / (1 + x)^{n+1}   mod 2, truncated at x^{n+1}.

Polynomial expansion and truncated inversion go through sympy.
"""

from __future__ import annotations

from dataclasses import dataclass

import sympy

from stable_sections.algebra.cohomology import RingElement, TruncatedRing, cup
from stable_sections.errors import InvalidInputError, RingMismatchError


@dataclass(frozen=True)
class TotalClass:
    """An inhomogeneous class w_0 + w_1 + ... with w_0 = 1."""

    element: RingElement

    def __post_init__(self) -> None:
        if self.element[0] != 1:
            raise InvalidInputError(f"Total class must have constant term 1, got {self.element}")

    @property
    def ring(self) -> TruncatedRing:
        return self.element.ring

    def component(self, degree: int) -> RingElement:
        return self.element.piece(degree)

    def is_trivial(self) -> bool:
        return self.element == self.ring.one()

    def __mul__(self, other: TotalClass) -> TotalClass:
        return TotalClass(cup(self.element, other.element))

    def __str__(self) -> str:
        return str(self.element)


def _symbol(ring: TruncatedRing) -> sympy.Symbol:
    return sympy.Symbol(ring.variable)


def _to_element(ring: TruncatedRing, expr: sympy.Expr) -> RingElement:
    """Truncate a sympy polynomial in the ring variable into ``ring``."""
    var = _symbol(ring)
    poly = sympy.Poly(sympy.expand(expr), var)
    coefficients: list[int] = []
    for k in range(ring.dimension):
        value = sympy.Rational(poly.coeff_monomial(var**k))
        if value.q != 1:
            raise InvalidInputError(f"Non-integral coefficient {value} of {var}^{k}")
        coefficients.append(int(value.p))
    return ring.element(coefficients)


def _to_expr(element: RingElement) -> sympy.Expr:
    var = _symbol(element.ring)
    return sum((c * var**k for k, c in enumerate(element.coefficients)), sympy.Integer(0))


def total_class(ring: TruncatedRing, coefficients: list[int] | tuple[int, ...]) -> TotalClass:
    """Total class from coefficients on 1, x, x^2, ... (user-supplied data for any X)."""
    return TotalClass(ring.element(coefficients))


def invert_total(c: TotalClass | RingElement) -> TotalClass:
    """Inverse in the truncated ring.

    Raises:
        InvalidInputError: If the constant term is not a unit.
    """
    element = c.element if isinstance(c, TotalClass) else c
    ring = element.ring
    if element[0] not in (1, -1):
        raise InvalidInputError(f"{element} has no inverse: constant term is not a unit")
    var = _symbol(ring)
    # Inverse over Q of the integral lift; reduction mod 2 commutes with it.
    inverse = sympy.invert(_to_expr(element), var ** (ring.truncation + 1), var)
    result = _to_element(ring, inverse)
    if result[0] != 1:
        raise InvalidInputError(f"{element} inverts to {result}, which is not a total class")
    return TotalClass(result)


def virtual_class(numerator: TotalClass, denominator: TotalClass) -> TotalClass:
    """Total class of a virtual bundle V - W from c(V) and c(W)."""
    if numerator.ring != denominator.ring:
        raise RingMismatchError("Numerator and denominator live in different rings")
    return numerator * invert_total(denominator)


def reduce_mod2(c: TotalClass) -> TotalClass:
    """Mod-2 reduction into the F2 ring with the same grading and truncation."""
    ring = c.ring
    target = TruncatedRing(ring.generator_degree, ring.truncation, "F2", "x")
    return TotalClass(target.element(list(c.element.coefficients)))


def _check_jet_arguments(n: int, d: int) -> None:
    if n < 1:
        raise InvalidInputError(f"Dimension n must be at least 1, got {n}")
    if d < 1:
        raise InvalidInputError(f"Twist d must be at least 1, got {d}")


def _power_of_linear(ring: TruncatedRing, slope: int, exponent: int) -> TotalClass:
    var = _symbol(ring)
    return TotalClass(_to_element(ring, (1 + slope * var) ** exponent))


def chern_jet1_line(n: int, d: int) -> TotalClass:
    """c(J^1 O(d)) on CP^n over the integers, in the variable h."""
    _check_jet_arguments(n, d)
    ring = TruncatedRing.projective_space(n, field="Q", variable="h")
    return _power_of_linear(ring, d - 1, n + 1)


def chern_tangent(n: int) -> TotalClass:
    """c(T CP^n) = (1 + h)^{n+1}."""
    ring = TruncatedRing.projective_space(n, field="Q", variable="h")
    return _power_of_linear(ring, 1, n + 1)


def sw_virtual(n: int, d: int) -> TotalClass:
    """w(J^1 O(d) - T CP^n) over F2."""
    _check_jet_arguments(n, d)
    return virtual_class(reduce_mod2(chern_jet1_line(n, d)), reduce_mod2(chern_tangent(n)))


def cp1_sphere_bundle_trivial(d: int) -> bool:
    """Whether the sphere bundle of J^1 O(d) over CP^1 is trivial.

    Rank-2 complex bundles over S^2 are classified by c_1, and the unit sphere
    bundle only sees c_1 mod 2, i.e. w_2. Since c_1 = 2(d-1)h this always
    vanishes and the section space is map(S^2, S^3).
    """
    _check_jet_arguments(1, d)
    w = reduce_mod2(chern_jet1_line(1, d))
    return not w.component(2)
