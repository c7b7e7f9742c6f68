"""The mod 2 Steenrod algebra in the admissible basis.

A monomial Sq^{i1} ... Sq^{ik} is a tuple ``(i1, ..., ik)`` of positive
integers; it is admissible when ``i_j >= 2 * i_{j+1}`` throughout, and the empty
tuple is the unit. Elements are sets of admissible monomials of one degree
(set membership is the F2 coefficient).
"""

from __future__ import annotations

import re
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from functools import cache

from stable_sections.config import get_settings
from stable_sections.errors import DegreeCapError, InvalidInputError

Monomial = tuple[int, ...]

_SQ_TOKEN = re.compile(r"sq(\d+)", re.IGNORECASE)


def binomial_mod2(n: int, k: int) -> int:
    """C(n, k) mod 2 by Lucas' theorem; zero outside 0 <= k <= n."""
    if n < 0 or k < 0 or k > n:
        return 0
    return int((n & k) == k)


def is_admissible(mono: Sequence[int]) -> bool:
    return all(i >= 1 for i in mono) and all(
        mono[j] >= 2 * mono[j + 1] for j in range(len(mono) - 1)
    )


def monomial_degree(mono: Sequence[int]) -> int:
    return sum(mono)


def monomial_order(mono: Monomial) -> tuple[int, Monomial]:
    """Sort key: length first, then lexicographic on exponents."""
    return (len(mono), mono)


def render_monomial(mono: Monomial) -> str:
    if not mono:
        return "1"
    return " ".join(f"Sq{i}" for i in mono)


@dataclass(frozen=True)
class SteenrodElement:
    """A homogeneous element of the Steenrod algebra."""

    degree: int
    terms: frozenset[Monomial] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.degree < 0:
            raise InvalidInputError(f"Negative degree {self.degree}")
        for term in self.terms:
            if not is_admissible(term):
                raise InvalidInputError(f"{render_monomial(term)} is not admissible")
            if monomial_degree(term) != self.degree:
                raise InvalidInputError(
                    f"{render_monomial(term)} does not have degree {self.degree}"
                )

    @classmethod
    def zero(cls, degree: int = 0) -> SteenrodElement:
        return cls(degree)

    @classmethod
    def unit(cls) -> SteenrodElement:
        return cls(0, frozenset({()}))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: SteenrodElement) -> SteenrodElement:
        if not other:
            return self
        if not self:
            return other
        if self.degree != other.degree:
            raise InvalidInputError(
                f"Cannot add elements of degrees {self.degree} and {other.degree}"
            )
        return SteenrodElement(self.degree, self.terms ^ other.terms)

    def sorted_terms(self) -> list[Monomial]:
        return sorted(self.terms, key=monomial_order)

    def coefficient(self, mono: Monomial) -> int:
        return int(mono in self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(render_monomial(t) for t in self.sorted_terms())


@cache
def _reduce_word(word: Monomial) -> frozenset[Monomial]:
    """Admissible expansion of an arbitrary word, straightening the leftmost bad pair."""
    word = tuple(i for i in word if i != 0)
    for idx in range(len(word) - 1):
        a, b = word[idx], word[idx + 1]
        if a >= 2 * b:
            continue
        prefix, suffix = word[:idx], word[idx + 2 :]
        result: set[Monomial] = set()
        # Sq^a Sq^b = sum_j C(b-1-j, a-2j) Sq^{a+b-j} Sq^j for a < 2b
        for j in range(a // 2 + 1):
            if binomial_mod2(b - 1 - j, a - 2 * j):
                result.symmetric_difference_update(
                    _reduce_word(prefix + (a + b - j, j) + suffix)
                )
        return frozenset(result)
    return frozenset({word})


def _admissible_sequences(n: int, max_first: int) -> Iterator[Monomial]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_first), 0, -1):
        for tail in _admissible_sequences(n - first, first // 2):
            yield (first, *tail)


class SteenrodAlgebra:
    """The mod 2 Steenrod algebra up to a fixed degree cap.

    Every operation refuses degrees above ``max_degree`` instead of truncating.
    The Adem straightening table is shared between instances and is safe for
    concurrent readers.
    """

    def __init__(self, max_degree: int = 64) -> None:
        if max_degree < 0:
            raise InvalidInputError(f"Degree cap must be non-negative, got {max_degree}")
        self.max_degree = max_degree
        self._basis: dict[int, list[Monomial]] = {}

    def _check_degree(self, degree: int) -> None:
        if degree > self.max_degree:
            raise DegreeCapError(
                f"Degree {degree} exceeds the Steenrod algebra cap {self.max_degree}"
            )

    def adem_reduce(self, word: Sequence[int]) -> SteenrodElement:
        """Admissible-basis expansion of Sq^{word}."""
        if any(i < 1 for i in word):
            raise InvalidInputError(f"Steenrod word entries must be positive: {list(word)}")
        degree = sum(word)
        self._check_degree(degree)
        return SteenrodElement(degree, _reduce_word(tuple(word)))

    def multiply(self, a: SteenrodElement, b: SteenrodElement) -> SteenrodElement:
        degree = a.degree + b.degree
        self._check_degree(degree)
        terms: set[Monomial] = set()
        for left in a.terms:
            for right in b.terms:
                terms.symmetric_difference_update(_reduce_word(left + right))
        return SteenrodElement(degree, frozenset(terms))

    def basis(self, n: int) -> list[Monomial]:
        """Admissible monomials of degree ``n`` in length-then-lexicographic order."""
        if n < 0:
            raise InvalidInputError(f"Negative degree {n}")
        self._check_degree(n)
        if n not in self._basis:
            self._basis[n] = sorted(_admissible_sequences(n, n), key=monomial_order)
        return self._basis[n]

    def dimension(self, n: int) -> int:
        return len(self.basis(n))

    def sq(self, k: int) -> SteenrodElement:
        """The single square Sq^k (the unit for k = 0)."""
        if k == 0:
            return SteenrodElement.unit()
        return self.adem_reduce([k])

    def parse(self, text: str) -> SteenrodElement:
        """Parse text such as ``"Sq3 Sq1 + sq4"``; ``"1"`` is the unit."""
        summands = [part.strip() for part in text.split("+")]
        if not any(summands):
            raise InvalidInputError("Empty Steenrod expression")
        total = SteenrodElement.zero()
        for summand in summands:
            if summand == "0":
                continue
            if summand == "1":
                total = total + SteenrodElement.unit()
                continue
            word: list[int] = []
            for token in summand.split():
                match = _SQ_TOKEN.fullmatch(token)
                if match is None:
                    raise InvalidInputError(f"Cannot parse Steenrod token {token!r}")
                word.append(int(match.group(1)))
            if not word:
                raise InvalidInputError(f"Empty summand in {text!r}")
            if 0 in word:
                word = [i for i in word if i != 0]
                if not word:
                    total = total + SteenrodElement.unit()
                    continue
            total = total + self.adem_reduce(word)
        return total

    def render(self, element: SteenrodElement) -> str:
        return str(element)


@cache
def _algebra_for_cap(cap: int) -> SteenrodAlgebra:
    return SteenrodAlgebra(cap)


def get_algebra() -> SteenrodAlgebra:
    """The shared algebra instance for the configured degree cap."""
    return _algebra_for_cap(get_settings().steenrod_degree_cap)
