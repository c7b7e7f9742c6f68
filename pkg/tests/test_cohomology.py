"""Tests for truncated cohomology rings and their Steenrod squares."""

import pytest

from stable_sections.algebra.cohomology import TruncatedRing, cup, sq, total_sq
from stable_sections.algebra.steenrod import SteenrodAlgebra
from stable_sections.errors import InvalidInputError, RingMismatchError


@pytest.fixture
def cp2() -> TruncatedRing:
    return TruncatedRing.projective_space(2)


class TestTruncatedRing:
    """Tests for ring structure and rendering."""

    def test_basis_degrees(self, cp2: TruncatedRing):
        """x^k sits in degree 2k up to the truncation."""
        assert cp2.basis_in_degree(4) == [2]
        assert cp2.basis_in_degree(3) == []
        assert cp2.basis_in_degree(6) == []
        assert cp2.top_degree == 4

    def test_odd_generator_degree_rejected(self):
        """Generators must sit in an even degree."""
        with pytest.raises(InvalidInputError):
            TruncatedRing(3, 2)

    def test_cup_products(self, cp2: TruncatedRing):
        """x.x = x^2, x^2.x = 0, (1+x)^2 = 1 + x^2."""
        x = cp2.gen()
        assert cup(x, x) == cp2.monomial(2)
        assert not cup(cp2.monomial(2), x)
        one_plus_x = cp2.one() + x
        assert str(one_plus_x * one_plus_x) == "1 + x^2"

    def test_ring_mismatch(self, cp2: TruncatedRing):
        """Elements of different rings do not multiply."""
        other = TruncatedRing.projective_space(3)
        with pytest.raises(RingMismatchError):
            cup(cp2.gen(), other.gen())

    def test_rendering_with_coefficients(self):
        """Integral elements show their coefficients."""
        ring = TruncatedRing.projective_space(2, field="Q", variable="h")
        assert str(ring.element([1, 6, 12])) == "1 + 6h + 12h^2"
        assert str(ring.element([1, -2])) == "1 - 2h"
        assert str(ring.zero()) == "0"


class TestSquares:
    """Tests for Sq^k on monomials."""

    def test_examples(self):
        """Sq2 x = x^2, Sq2 x^2 = 0, Sq2 x^3 = x^4."""
        ring = TruncatedRing.projective_space(5)
        assert sq(2, ring.gen()) == ring.monomial(2)
        assert not sq(2, ring.monomial(2))
        assert sq(2, ring.monomial(3)) == ring.monomial(4)

    def test_total_square(self):
        """Total squares of 1, x and x^2."""
        ring = TruncatedRing.projective_space(4)
        assert total_sq(ring.one()) == [ring.one()]
        assert total_sq(ring.gen()) == [ring.gen(), ring.zero(), ring.monomial(2)]
        assert total_sq(ring.monomial(2)) == [
            ring.monomial(2),
            ring.zero(),
            ring.zero(),
            ring.zero(),
            ring.monomial(4),
        ]

    def test_non_homogeneous_rejected(self, cp2: TruncatedRing):
        """Sq needs a homogeneous argument."""
        with pytest.raises(InvalidInputError):
            sq(2, cp2.one() + cp2.gen())

    def test_rational_ring_rejected(self):
        """Squares are defined mod 2 only."""
        ring = TruncatedRing.projective_space(2, field="Q")
        with pytest.raises(InvalidInputError):
            sq(2, ring.gen())

    def test_instability(self):
        """Sq0 is the identity, Sq^{deg} squares, higher squares vanish."""
        ring = TruncatedRing.projective_space(8)
        for k in range(ring.dimension):
            a = ring.monomial(k)
            deg = 2 * k
            assert sq(0, a) == a
            assert sq(deg, a) == cup(a, a)
            for extra in range(1, 4):
                assert not sq(deg + extra, a)

    @pytest.mark.parametrize("m", range(1, 9))
    def test_cartan_formula(self, m: int):
        """Sq^k(ab) = sum Sq^i(a) Sq^j(b) on all monomial pairs of F2[x]/(x^{m+1})."""
        ring = TruncatedRing.projective_space(m)
        for i in range(ring.dimension):
            for j in range(ring.dimension):
                a, b = ring.monomial(i), ring.monomial(j)
                for k in range(2 * (i + j) + 1):
                    expected = ring.zero()
                    for p in range(k + 1):
                        expected = expected + cup(sq(p, a), sq(k - p, b))
                    assert sq(k, cup(a, b)) == expected

    def test_adem_consistency(self, algebra: SteenrodAlgebra):
        """Iterated squares agree with the admissible expansion on every monomial."""
        ring = TruncatedRing.projective_space(6)

        def apply(mono: tuple[int, ...], z):
            for i in reversed(mono):
                z = sq(i, z)
            return z

        for k in range(ring.dimension):
            z = ring.monomial(k)
            for b in range(1, 9):
                for a in range(1, 2 * b):
                    expected = ring.zero()
                    for mono in algebra.adem_reduce([a, b]).terms:
                        expected = expected + apply(mono, z)
                    assert sq(a, sq(b, z)) == expected
