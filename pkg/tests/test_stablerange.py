"""Tests for stability range arithmetic and stable rational series."""

from fractions import Fraction
from math import floor

import pytest

from stable_sections.errors import InvalidInputError
from stable_sections.models.ranges import GeneratorRecord, RangeInput
from stable_sections.stablerange.bounds import (
    big_n,
    jet_amp_power,
    jet_amp_tensor,
    jet_rank,
    p_torsion_stable,
    stability_bound,
    stable_range_for,
)
from stable_sections.stablerange.series import curve_betti, projective_betti, stable_series


class TestJetAmpleness:
    """Tests for the tensor rule and jet ranks."""

    def test_tensor_rule(self):
        """Levels add under tensor product."""
        assert jet_amp_tensor(2, 3) == 5
        with pytest.raises(InvalidInputError):
            jet_amp_tensor(-1, 2)

    @pytest.mark.parametrize(("base", "d", "expected"), [(1, 7, 7), (4, 1, 4), (2, 3, 6)])
    def test_power(self, base: int, d: int, expected: int):
        """Powers multiply the level."""
        assert jet_amp_power(base, d) == expected

    def test_power_needs_positive_exponent(self):
        """d = 0 is refused."""
        with pytest.raises(InvalidInputError):
            jet_amp_power(1, 0)

    def test_jet_rank(self):
        """J^1 of a line bundle on an n-fold has rank n + 1."""
        assert [jet_rank(n, 1) for n in range(1, 5)] == [2, 3, 4, 5]
        assert jet_rank(2, 2, rank=3) == 18


class TestBigN:
    """Tests for N(E, r)."""

    @pytest.mark.parametrize(("amp", "r", "expected"), [(5, 1, 2), (0, 0, 0), (7, 1, 3), (0, 1, -1)])
    def test_values(self, amp: int, r: int, expected: int):
        """Largest N with (N+1)(r+1) - 1 <= amp."""
        assert big_n(amp, r) == expected

    def test_line_bundle_case(self):
        """amp = d, r = 1 gives floor((d-1)/2)."""
        for d in range(1, 100):
            assert big_n(d, 1) == (d - 1) // 2

    def test_monotone(self):
        """Non-decreasing in amp, non-increasing in r."""
        for r in range(6):
            values = [big_n(amp, r) for amp in range(60)]
            assert values == sorted(values)
        for amp in range(60):
            values = [big_n(amp, r) for r in range(6)]
            assert values == sorted(values, reverse=True)


class TestStabilityBound:
    """Tests for the main bound and its companions."""

    def test_d7(self):
        """N = 3 and the main and line-bundle ranges agree."""
        report = stability_bound(RangeInput.line_bundle(2, 7))
        assert report.big_n == 3
        assert report.bound_main == 3
        assert report.bound_line_bundle == Fraction(3)
        assert not report.discrepancy
        assert report.describe() == "iso in degrees * ≤ 2"

    def test_d6_flags_discrepancy(self):
        """The literal (d-1)/2 = 2.5 admits degree 2, the main bound does not."""
        report = stability_bound(RangeInput.line_bundle(2, 6))
        assert report.bound_main == 2
        assert report.line_bundle_max_degree == 2
        assert report.max_degree == 1
        assert report.discrepancy

    def test_e3_n0(self):
        """e = 3, N = 0 gives bound 1."""
        report = stability_bound(RangeInput(n=1, r=1, amp=1, rk=2, codim=5))
        assert (report.big_n, report.e, report.bound_main) == (0, 3, 1)

    def test_d1_is_empty(self):
        """No degree qualifies for d = 1."""
        report = stability_bound(RangeInput.line_bundle(1, 1))
        assert report.is_empty
        assert report.describe() == "empty range: no degrees"

    def test_inadmissible(self):
        """e < 2 is refused."""
        with pytest.raises(InvalidInputError, match="excess codimension 0"):
            stability_bound(RangeInput(n=2, r=1, amp=7, rk=3, codim=4))

    @pytest.mark.parametrize("d", range(2, 201))
    def test_line_bundle_range(self, d: int):
        """Zero-section bound is floor((d-1)/2), flagged against (d-1)/2 for even d."""
        for n in (1, 2, 3):
            report = stability_bound(RangeInput.line_bundle(n, d))
            assert report.bound_main == floor((d - 1) / 2)
            assert report.discrepancy == (d % 2 == 0)

    def test_main_bound_below_intro_bound(self):
        """With e = 2 the main bound never exceeds (d - r)/(r + 1)."""
        for r in range(5):
            for d in range(0, 201):
                report = stability_bound(RangeInput(n=1, r=r, amp=d, rk=2, codim=4))
                assert report.bound_main <= report.bound_intro

    def test_negative_n_is_unclamped(self):
        """N = -1 gives N(e-1) + e - 2 = -1, below the introductory bound and empty."""
        report = stability_bound(RangeInput(n=1, r=2, amp=0, rk=2, codim=4))
        assert report.big_n == -1
        assert report.bound_main == -1
        assert report.bound_intro == Fraction(-2, 3)
        assert report.is_empty
        assert not report.discrepancy


class TestStableRangeFor:
    """Tests for the integer range below (d-1)/2."""

    @pytest.mark.parametrize(("d", "expected"), [(7, 2), (6, 2), (100, 49), (2, 0), (1, -1)])
    def test_values(self, d: int, expected: int):
        """Greatest integer strictly below (d-1)/2."""
        assert stable_range_for(d) == expected

    def test_invalid(self):
        """d must be positive."""
        with pytest.raises(InvalidInputError):
            stable_range_for(0)


class TestPTorsion:
    """Tests for the p-local triviality criterion."""

    @pytest.mark.parametrize(("p", "n", "expected"), [(5, 2, True), (2, 2, False), (3, 1, True)])
    def test_criterion(self, p: int, n: int, expected: bool):
        """p >= n + 2."""
        assert p_torsion_stable(p, n) is expected

    def test_non_prime(self):
        """Composite p is refused."""
        with pytest.raises(InvalidInputError):
            p_torsion_stable(4, 1)


class TestStableSeries:
    """Tests for the free graded-commutative algebra on shifted Betti numbers."""

    def test_cp2(self):
        """(1 + q)(1 + q^3)(1 + q^5) through degree 9."""
        series = stable_series(projective_betti(2), 9)
        assert series.coefficients == [1, 1, 0, 1, 1, 1, 1, 0, 1, 1]
        assert series.max_degree == 9

    @pytest.mark.parametrize("n", range(0, 6))
    def test_cpn_is_exterior(self, n: int):
        """CP^n gives exterior generators in degrees 1, 3, ..., 2n + 1."""
        series = stable_series(projective_betti(n), 2 * (n + 1) ** 2)
        assert [g.degree for g in series.generators] == list(range(1, 2 * n + 2, 2))
        assert {g.parity for g in series.generators} == {"exterior"}
        assert series.total_dimension() == 2 ** (n + 1)
        assert sum(series.coefficients) == 2 ** (n + 1)

    def test_elliptic_curve(self):
        """b = (1, 2, 1) mixes exterior and polynomial generators."""
        series = stable_series(curve_betti(1), 4)
        assert series.generators == [
            GeneratorRecord(1, 1, "exterior"),
            GeneratorRecord(2, 2, "polynomial"),
            GeneratorRecord(3, 1, "exterior"),
        ]
        assert series.coefficients == [1, 1, 2, 3, 4]
        assert series.total_dimension() is None

    def test_eilenberg_maclane_factors(self):
        """Each generator record names its K(Q^b, i) factor."""
        series = stable_series(curve_betti(1), 3)
        assert [g.eilenberg_maclane() for g in series.generators] == [
            "K(Q, 1)",
            "K(Q^2, 2)",
            "K(Q, 3)",
        ]

    def test_lines(self):
        """Series print as "deg: dim" lines."""
        assert stable_series([1], 2).lines() == ["0: 1", "1: 1", "2: 0"]

    def test_invalid_input(self):
        """b_0 >= 1, non-negative Betti numbers and max_deg."""
        with pytest.raises(InvalidInputError):
            stable_series([0, 1], 3)
        with pytest.raises(InvalidInputError):
            stable_series([1, -1], 3)
        with pytest.raises(InvalidInputError):
            stable_series([1], -1)
