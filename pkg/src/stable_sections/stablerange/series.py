"""Stable rational cohomology as a free graded-commutative algebra.

Each b_i = dim H^i(X; Q) contributes b_i generators in degree i + 1: exterior
when i + 1 is odd, polynomial when it is even. The Poincare series is the
product of (1 + q^k)^b and (1 - q^k)^(-b) factors, expanded with sympy.
"""

from __future__ import annotations

import sympy

from stable_sections.errors import InvalidInputError
from stable_sections.models.ranges import GeneratorRecord, PoincareSeries

_Q = sympy.Symbol("q")


def projective_betti(n: int) -> list[int]:
    """Betti numbers of CP^n: 1, 0, 1, ..., 0, 1."""
    if n < 0:
        raise InvalidInputError(f"Dimension must be non-negative, got {n}")
    return [1 if i % 2 == 0 else 0 for i in range(2 * n + 1)]


def curve_betti(genus: int) -> list[int]:
    if genus < 0:
        raise InvalidInputError(f"Genus must be non-negative, got {genus}")
    return [1, 2 * genus, 1]


def _factor(record: GeneratorRecord, max_deg: int) -> sympy.Expr:
    term = _Q**record.degree
    if record.parity == "exterior":
        return (1 + term) ** record.count
    # (1 - q^k)^(-b) = sum_j C(b + j - 1, j) q^(k j)
    return sum(
        (
            sympy.binomial(record.count + j - 1, j) * term**j
            for j in range(max_deg // record.degree + 1)
        ),
        sympy.Integer(0),
    )


def stable_series(betti: list[int], max_deg: int) -> PoincareSeries:
    """Graded dimensions of Lambda(H^{*-1}(X; Q)) through ``max_deg``.

    Raises:
        InvalidInputError: If b_0 < 1, a Betti number is negative, or max_deg < 0.
    """
    if not betti or betti[0] < 1:
        raise InvalidInputError("b_0 must be at least 1")
    if any(b < 0 for b in betti):
        raise InvalidInputError(f"Betti numbers must be non-negative: {betti}")
    if max_deg < 0:
        raise InvalidInputError(f"max_deg must be non-negative, got {max_deg}")
    generators = [
        GeneratorRecord(
            degree=i + 1, count=b, parity="exterior" if (i + 1) % 2 else "polynomial"
        )
        for i, b in enumerate(betti)
        if b
    ]
    product = sympy.Integer(1)
    for record in generators:
        if record.degree <= max_deg:
            product = sympy.expand(product * _factor(record, max_deg))
    poly = sympy.Poly(product, _Q)
    coefficients = [int(poly.coeff_monomial(_Q**k)) for k in range(max_deg + 1)]
    return PoincareSeries(coefficients=coefficients, generators=generators)
