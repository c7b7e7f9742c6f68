"""Jet ampleness arithmetic and homological stability bounds."""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import ceil, comb

import sympy

from stable_sections.errors import InvalidInputError
from stable_sections.models.ranges import RangeInput, RangeReport


def jet_amp_tensor(a: int, b: int) -> int:
    """E a-jet ample and F b-jet ample make E (x) F (a+b)-jet ample."""
    if a < 0 or b < 0:
        raise InvalidInputError(f"Jet ampleness levels must be non-negative, got {a}, {b}")
    return a + b


def jet_amp_power(base_amp: int, d: int) -> int:
    """Ampleness of the d-th tensor power."""
    if d < 1:
        raise InvalidInputError(f"Tensor power must be at least 1, got {d}")
    return reduce(jet_amp_tensor, [base_amp] * d)


def jet_rank(n: int, r: int, rank: int = 1) -> int:
    """Complex rank of J^r E for E of the given rank on an n-fold."""
    if n < 0 or r < 0 or rank < 1:
        raise InvalidInputError(f"Invalid jet bundle data n={n}, r={r}, rank={rank}")
    return rank * comb(n + r, r)


def big_n(amp: int, r: int) -> int:
    """Largest N with E ((N+1)(r+1) - 1)-jet ample, or -1 when there is none."""
    if r < 0:
        raise InvalidInputError(f"Jet order must be non-negative, got {r}")
    if amp < 0:
        raise InvalidInputError(f"Jet ampleness must be non-negative, got {amp}")
    return max(-1, (amp + 1) // (r + 1) - 1)


def _validate(inp: RangeInput) -> None:
    if inp.n < 0 or inp.rk < 1:
        raise InvalidInputError(f"Invalid dimension data n={inp.n}, rk={inp.rk}")
    if inp.e < 2:
        raise InvalidInputError(
            f"Taylor condition is not admissible: excess codimension {inp.e} < 2 "
            f"(codim {inp.codim}, n {inp.n})"
        )


def _range_end(bound: Fraction | int) -> int:
    # "* < bound" over degrees >= 0; every empty range ends at 0
    return max(ceil(bound), 0)


def stability_bound(inp: RangeInput) -> RangeReport:
    """Main range N(e-1) + e - 2, with the introductory and line-bundle bounds alongside.

    The line-bundle bound (d-1)/2 is filled in for r = 1, rk = n + 1 and the
    zero section. ``discrepancy`` is set when its integer range differs from the
    main one; for other inputs with e = 2 the introductory bound is compared.

    Raises:
        InvalidInputError: If the Taylor condition has excess codimension below 2.
    """
    _validate(inp)
    n_value = big_n(inp.amp, inp.r)
    e = inp.e
    bound_main = n_value * (e - 1) + e - 2
    bound_intro = Fraction(inp.amp - inp.r, inp.r + 1)
    bound_line_bundle = Fraction(inp.amp - 1, 2) if inp.is_zero_section_line_case else None
    if bound_line_bundle is not None:
        discrepancy = _range_end(bound_line_bundle) != _range_end(bound_main)
    elif e == 2:
        discrepancy = _range_end(bound_intro) != _range_end(bound_main)
    else:
        discrepancy = False
    return RangeReport(
        big_n=n_value,
        e=e,
        bound_main=bound_main,
        bound_intro=bound_intro,
        bound_line_bundle=bound_line_bundle,
        discrepancy=discrepancy,
    )


def stable_range_for(d: int) -> int:
    """Largest degree strictly below (d-1)/2; -1 means no degree qualifies."""
    if d < 1:
        raise InvalidInputError(f"Twist d must be at least 1, got {d}")
    return ceil(Fraction(d - 1, 2)) - 1


def p_torsion_stable(p: int, n: int) -> bool:
    """Whether p-locally the sphere bundle of sections is trivial: p >= n + 2."""
    if not sympy.isprime(p):
        raise InvalidInputError(f"{p} is not a prime")
    if n < 1:
        raise InvalidInputError(f"Dimension n must be at least 1, got {n}")
    return p >= n + 2
