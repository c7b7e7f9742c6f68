"""Truncated polynomial cohomology rings and their Steenrod action.

A ``TruncatedRing`` models k[x]/(x^{m+1}) with x in an even degree, e.g.
H*(CP^m; F2) with x in degree 2. Elements keep one integer coefficient per
monomial x^0..x^m; over F2 the coefficients are reduced mod 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from stable_sections.algebra.steenrod import binomial_mod2
from stable_sections.errors import InvalidInputError, RingMismatchError

Field = Literal["F2", "Q"]


@dataclass(frozen=True)
class TruncatedRing:
    """The ring k[x]/(x^{truncation+1}) with x in ``generator_degree``."""

    generator_degree: int
    truncation: int
    field: Field = "F2"
    variable: str = "x"

    def __post_init__(self) -> None:
        if self.generator_degree <= 0 or self.generator_degree % 2:
            raise InvalidInputError(
                f"Generator degree must be even and positive, got {self.generator_degree}"
            )
        if self.truncation < 0:
            raise InvalidInputError(f"Truncation must be non-negative, got {self.truncation}")
        if self.field not in ("F2", "Q"):
            raise InvalidInputError(f"Unknown coefficient field {self.field!r}")

    @classmethod
    def projective_space(cls, n: int, field: Field = "F2", variable: str = "x") -> TruncatedRing:
        """H*(CP^n) with the hyperplane class in degree 2."""
        return cls(2, n, field, variable)

    @property
    def dimension(self) -> int:
        return self.truncation + 1

    @property
    def top_degree(self) -> int:
        return self.generator_degree * self.truncation

    def monomial_degree(self, exponent: int) -> int:
        return self.generator_degree * exponent

    def basis_in_degree(self, degree: int) -> list[int]:
        """Exponents k with deg x^k == degree (at most one)."""
        k, rem = divmod(degree, self.generator_degree)
        if degree < 0 or rem or k > self.truncation:
            return []
        return [k]

    def element(self, coefficients: list[int] | tuple[int, ...]) -> RingElement:
        """Element with the given coefficients on x^0, x^1, ...; extra terms are truncated."""
        padded = list(coefficients[: self.dimension])
        padded += [0] * (self.dimension - len(padded))
        return RingElement(self, tuple(padded))

    def zero(self) -> RingElement:
        return self.element([])

    def one(self) -> RingElement:
        return self.element([1])

    def monomial(self, exponent: int) -> RingElement:
        if exponent < 0:
            raise InvalidInputError(f"Negative exponent {exponent}")
        if exponent > self.truncation:
            return self.zero()
        return self.element([0] * exponent + [1])

    def gen(self) -> RingElement:
        return self.monomial(1)


@dataclass(frozen=True)
class RingElement:
    """An element of a ``TruncatedRing``, stored densely."""

    ring: TruncatedRing
    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coefficients) != self.ring.dimension:
            raise InvalidInputError(
                f"Expected {self.ring.dimension} coefficients, got {len(self.coefficients)}"
            )
        if self.ring.field == "F2":
            object.__setattr__(self, "coefficients", tuple(c % 2 for c in self.coefficients))

    def _same_ring(self, other: RingElement) -> None:
        if self.ring != other.ring:
            raise RingMismatchError(f"Elements live in different rings: {self.ring} vs {other.ring}")

    def __bool__(self) -> bool:
        return any(self.coefficients)

    def __add__(self, other: RingElement) -> RingElement:
        self._same_ring(other)
        return RingElement(
            self.ring, tuple(a + b for a, b in zip(self.coefficients, other.coefficients))
        )

    def __mul__(self, other: RingElement) -> RingElement:
        return cup(self, other)

    def __getitem__(self, exponent: int) -> int:
        return self.coefficients[exponent]

    @property
    def support(self) -> list[int]:
        return [k for k, c in enumerate(self.coefficients) if c]

    def is_homogeneous(self) -> bool:
        return len(self.support) <= 1

    @property
    def degree(self) -> int | None:
        """Degree of a nonzero homogeneous element; ``None`` for zero."""
        support = self.support
        if not support:
            return None
        if len(support) > 1:
            raise InvalidInputError(f"{self} is not homogeneous")
        return self.ring.monomial_degree(support[0])

    def piece(self, degree: int) -> RingElement:
        """The homogeneous component in ``degree``."""
        keep = set(self.ring.basis_in_degree(degree))
        return RingElement(
            self.ring, tuple(c if k in keep else 0 for k, c in enumerate(self.coefficients))
        )

    def pieces(self) -> list[RingElement]:
        """Components in degrees 0, 1, ..., top degree."""
        return [self.piece(deg) for deg in range(self.ring.top_degree + 1)]

    def __str__(self) -> str:
        terms: list[str] = []
        var = self.ring.variable
        for k, c in enumerate(self.coefficients):
            if not c:
                continue
            if k == 0:
                body = str(abs(c))
            else:
                power = var if k == 1 else f"{var}^{k}"
                body = power if abs(c) == 1 else f"{abs(c)}{power}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(terms) if terms else "0"


def cup(a: RingElement, b: RingElement) -> RingElement:
    """Product truncated above x^m."""
    a._same_ring(b)
    ring = a.ring
    product = [0] * ring.dimension
    for i in a.support:
        for j in b.support:
            if i + j <= ring.truncation:
                product[i + j] += a[i] * b[j]
    return RingElement(ring, tuple(product))


def _require_f2_action(ring: TruncatedRing) -> None:
    if ring.field != "F2":
        raise InvalidInputError("Steenrod squares act on F2 coefficients only")
    q = ring.generator_degree
    if q & (q - 1):
        raise InvalidInputError(
            f"No Steenrod action for a generator in degree {q}; it must be a power of two"
        )


def sq(k: int, a: RingElement) -> RingElement:
    """Sq^k of a homogeneous element.

    For x in degree q, Sq^{iq}(x^j) = C(j, i) x^{j+i} and squares of other
    degrees vanish.
    """
    if k < 0:
        raise InvalidInputError(f"Negative square Sq^{k}")
    ring = a.ring
    _require_f2_action(ring)
    if not a.is_homogeneous():
        raise InvalidInputError(f"Sq^{k} needs a homogeneous argument, got {a}")
    if not a or k % ring.generator_degree:
        return ring.zero()
    i = k // ring.generator_degree
    j = a.support[0]
    if binomial_mod2(j, i):
        return ring.monomial(j + i)
    return ring.zero()


def total_sq(a: RingElement) -> list[RingElement]:
    """[Sq^0 a, Sq^1 a, ..., Sq^{deg a} a]."""
    _require_f2_action(a.ring)
    if not a.is_homogeneous():
        raise InvalidInputError(f"Total square needs a homogeneous argument, got {a}")
    degree = a.degree or 0
    return [sq(k, a) for k in range(degree + 1)]
