"""Matrix exponential and the symmetric-positive-definite square root and logarithm."""

from __future__ import annotations

import numpy as np
import scipy.linalg

from orbitkit.core.errors import DomainError
from orbitkit.linalg.kinds import Matrix, is_symmetric, shape, to_float


def matrix_exp(X: Matrix) -> np.ndarray:
    """exp(X) by scaling-and-squaring with a Padé core."""
    rows, cols = shape(X)
    if rows != cols:
        raise DomainError(f"matrix_exp needs a square matrix, got {rows}x{cols}")
    return scipy.linalg.expm(to_float(X))


def _spd_eigh(P: Matrix, tol: float) -> tuple[np.ndarray, np.ndarray]:
    F = to_float(P)
    if not is_symmetric(F, tol * max(1.0, float(np.max(np.abs(F))) if F.size else 1.0)):
        raise DomainError("matrix is not symmetric")
    eigenvalues, vectors = np.linalg.eigh((F + F.T) / 2)
    if eigenvalues.size and eigenvalues[0] <= 0:
        raise DomainError(
            {"reason": "matrix is not positive definite", "eigenvalue": float(eigenvalues[0])}
        )
    return eigenvalues, vectors


def spd_sqrt(P: Matrix, tol: float = 1e-10) -> np.ndarray:
    eigenvalues, vectors = _spd_eigh(P, tol)
    return (vectors * np.sqrt(eigenvalues)) @ vectors.T


def matrix_log_spd(P: Matrix, tol: float = 1e-10) -> np.ndarray:
    """Symmetric logarithm of an SPD matrix via its eigen-decomposition."""
    eigenvalues, vectors = _spd_eigh(P, tol)
    return (vectors * np.log(eigenvalues)) @ vectors.T
