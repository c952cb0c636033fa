"""Fourier coefficients c(T, R) of f(τ, z) = Σ c(T, R) e^{2πi(Tτ + Rz)} for n = m = 1."""

from __future__ import annotations

import logging

import numpy as np
import sympy

from orbitkit.core.errors import DomainError
from orbitkit.jacobi.group import JacobiPoint
from orbitkit.jacobi_forms.slash import JacobiFunction
from orbitkit.symplectic import SiegelPoint

logger = logging.getLogger(__name__)

# Y = 1 amplifies quadrature error by e^{2πT}; 0.5 keeps T ≤ 4 inside double precision.
DEFAULT_Y = 0.5
DEFAULT_V = 0.0
DEFAULT_GRID = 64


def fourier_coefficient(
    f: JacobiFunction,
    T: object,
    R: object,
    *,
    Y: float = DEFAULT_Y,
    V: float = DEFAULT_V,
    grid: int = DEFAULT_GRID,
) -> complex:
    """Trapezoid rule over [0,1)² of f(X+iY, U+iV) e^{−2πi(TX+RU)}, times e^{2πTY} e^{2πRV}."""
    T_exact, R_exact = sympy.nsimplify(T), sympy.nsimplify(R)
    if not (2 * T_exact).is_integer or not R_exact.is_integer:
        raise DomainError(
            {"reason": "2T and R must be integers", "T": str(T_exact), "R": str(R_exact)}
        )
    if T_exact < 0:
        raise DomainError({"reason": "T must be nonnegative", "T": str(T_exact)})
    if Y <= 0 or V < 0:
        raise DomainError({"reason": "need Y > 0 and V >= 0", "Y": Y, "V": V})
    if grid < 64:
        raise DomainError({"reason": "quadrature grid must have at least 64 points", "grid": grid})
    T_float, R_float = float(T_exact), float(R_exact)
    nodes = np.arange(grid) / grid
    samples = np.array(
        [
            [
                f(JacobiPoint(SiegelPoint(np.array([[x + 1j * Y]])), np.array([[u + 1j * V]])))
                for u in nodes
            ]
            for x in nodes
        ],
        dtype=np.complex128,
    )
    phases = np.exp(-2j * np.pi * (T_float * nodes[:, None] + R_float * nodes[None, :]))
    mean = np.mean(samples * phases)
    coefficient = complex(mean * np.exp(2 * np.pi * T_float * Y) * np.exp(2 * np.pi * R_float * V))
    logger.debug("c(%s, %s) = %s on a %dx%d grid", T_exact, R_exact, coefficient, grid, grid)
    return coefficient
