"""Tests for characteristic classes of jet bundles."""

import pytest

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
from stable_sections.algebra.cohomology import TruncatedRing, cup
from stable_sections.errors import InvalidInputError


class TestChernClasses:
    """Tests for c(J^1 O(d)) = (1 + (d-1)h)^{n+1}."""

    def test_cp2_d3(self):
        """(1 + 2h)^3 truncated at h^3."""
        assert str(chern_jet1_line(2, 3)) == "1 + 6h + 12h^2"

    def test_cp1_first_chern_class(self):
        """c_1 = 2(d-1)h on CP^1."""
        for d in range(1, 12):
            c = chern_jet1_line(1, d)
            assert c.element.coefficients == (1, 2 * (d - 1))

    def test_trivial_twist(self):
        """d = 1 gives the trivial class."""
        assert chern_jet1_line(1, 1).is_trivial()

    def test_invalid_arguments(self):
        """n and d must be positive."""
        with pytest.raises(InvalidInputError):
            chern_jet1_line(0, 3)
        with pytest.raises(InvalidInputError):
            sw_virtual(2, 0)


class TestStiefelWhitney:
    """Tests for w(J^1 O(d) - T CP^n)."""

    @pytest.mark.parametrize("d", range(1, 51))
    def test_cp2_parity(self, d: int):
        """1 for even d, 1 + x for odd d."""
        expected = "1" if d % 2 == 0 else "1 + x"
        assert str(sw_virtual(2, d)) == expected

    @pytest.mark.parametrize("d", range(1, 51))
    def test_cp1_degree_two_piece_vanishes(self, d: int):
        """The class is trivial on CP^1."""
        assert not sw_virtual(1, d).component(2)

    def test_whitney_sum_identity(self):
        """w(V - T) w(T) = w(V) for n <= 6, d <= 20."""
        for n in range(1, 7):
            for d in range(1, 21):
                w = sw_virtual(n, d)
                tangent = reduce_mod2(chern_jet1_line(n, 2))
                jet = reduce_mod2(chern_jet1_line(n, d))
                assert w * tangent == jet

    def test_depends_on_parity_only(self):
        """d and d + 2 give the same class."""
        for n in range(1, 7):
            for d in range(1, 19):
                assert sw_virtual(n, d) == sw_virtual(n, d + 2)

    def test_constant_term_is_one(self):
        """Every output is a total class."""
        for n in range(1, 5):
            for d in range(1, 8):
                assert sw_virtual(n, d).element[0] == 1


class TestInversion:
    """Tests for truncated inverses."""

    def test_one(self):
        """1 inverts to 1."""
        ring = TruncatedRing.projective_space(3)
        assert invert_total(ring.one()).is_trivial()

    def test_geometric_series(self):
        """(1 + x)^{-1} = 1 + x + x^2 in F2[x]/(x^3)."""
        ring = TruncatedRing.projective_space(2)
        inverse = invert_total(total_class(ring, [1, 1]))
        assert str(inverse) == "1 + x + x^2"

    def test_product_with_inverse(self):
        """c . c^{-1} = 1 over both fields."""
        for field in ("F2", "Q"):
            ring = TruncatedRing.projective_space(5, field=field)
            c = total_class(ring, [1, 3, -2, 5, 0, 7])
            product = cup(c.element, invert_total(c).element)
            assert product == ring.one()

    def test_non_unit_rejected(self):
        """A zero constant term has no inverse."""
        ring = TruncatedRing.projective_space(2)
        with pytest.raises(InvalidInputError):
            invert_total(ring.gen())
        with pytest.raises(InvalidInputError):
            TotalClass(ring.gen())

    def test_virtual_class(self):
        """V - V is trivial."""
        ring = TruncatedRing.projective_space(3, field="Q", variable="h")
        c = total_class(ring, [1, 4, 6, 4])
        assert virtual_class(c, c).is_trivial()


class TestCP1:
    """Tests for the CP^1 triviality criterion."""

    def test_always_trivial(self):
        """w_2 = c_1 mod 2 vanishes for every d."""
        assert all(cp1_sphere_bundle_trivial(d) for d in range(1, 30))
