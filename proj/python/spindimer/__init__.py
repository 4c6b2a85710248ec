"""Exact spectra and entanglement negativity of the mixed spin-(1/2,S) XXZ Heisenberg dimer."""

from ._core import (
    Branch,
    DimerModel,
    SectorSpectrum,
    build_hamiltonian,
    closed_form_spectrum,
    eigenvector_in_product_basis,
    eigh,
    geometric_grid,
    ground_state_density,
    ground_state_manifold,
    negativity,
    negativity_closed_pm_half,
    negativity_closed_stretched,
    negativity_vs_d,
    partial_transpose_half,
    phase_diagram,
    sector_coefficients,
    spin_matrices,
    thermal_density,
    thermal_profile,
    threshold_temperature,
)

__all__ = [
    "Branch",
    "DimerModel",
    "SectorSpectrum",
    "build_hamiltonian",
    "closed_form_spectrum",
    "eigenvector_in_product_basis",
    "eigh",
    "geometric_grid",
    "ground_state_density",
    "ground_state_manifold",
    "negativity",
    "negativity_closed_pm_half",
    "negativity_closed_stretched",
    "negativity_vs_d",
    "partial_transpose_half",
    "phase_diagram",
    "sector_coefficients",
    "spin_matrices",
    "thermal_density",
    "thermal_profile",
    "threshold_temperature",
]

__version__ = "0.1.0"
