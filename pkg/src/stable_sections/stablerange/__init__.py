"""Stability ranges, E1 vanishing zones and stable rational cohomology."""

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
from stable_sections.stablerange.zones import (
    e1_differential_target,
    e1_support,
    render_e1_zones,
    zone_input,
)

__all__ = [
    "big_n",
    "curve_betti",
    "e1_differential_target",
    "e1_support",
    "jet_amp_power",
    "jet_amp_tensor",
    "jet_rank",
    "p_torsion_stable",
    "projective_betti",
    "render_e1_zones",
    "stability_bound",
    "stable_range_for",
    "stable_series",
    "zone_input",
]
