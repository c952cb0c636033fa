"""Scalar-weight Jacobi forms: the slash action, theta series and Fourier coefficients."""

from orbitkit.jacobi_forms.fourier import fourier_coefficient
from orbitkit.jacobi_forms.slash import SlashContext, automorphic_factor, slash, slashed
from orbitkit.jacobi_forms.theta import (
    GENERATORS,
    InvarianceReport,
    ThetaSpec,
    ThetaValue,
    default_grid,
    e8_gram,
    invariance_generator,
    lattice_count,
    theta_eval,
    theta_function,
    theta_slash_invariance,
)

__all__ = [
    "GENERATORS",
    "InvarianceReport",
    "SlashContext",
    "ThetaSpec",
    "ThetaValue",
    "automorphic_factor",
    "default_grid",
    "e8_gram",
    "fourier_coefficient",
    "invariance_generator",
    "lattice_count",
    "slash",
    "slashed",
    "theta_eval",
    "theta_function",
    "theta_slash_invariance",
]
