"""Random group elements for property checks and orbit sampling.

Exact samplers draw small integers so products stay readable; float samplers
keep condition numbers moderate so roundtrip tolerances stay meaningful.
"""

from __future__ import annotations

import numpy as np
import sympy

from orbitkit.heisenberg.group import HeisElement
from orbitkit.linalg.kinds import Matrix, exact, identity, zeros
from orbitkit.symplectic import J, SymplecticElement, n_factor, t_factor, unitary_to_k


def _int_symmetric(rng: np.random.Generator, n: int, bound: int) -> np.ndarray:
    S = rng.integers(-bound, bound + 1, size=(n, n))
    return np.triu(S) + np.triu(S, 1).T


def random_symplectic_exact(
    rng: np.random.Generator, n: int, *, factors: int = 3, bound: int = 2
) -> SymplecticElement:
    """Product of random upper and lower integer shears and J_n."""
    E = identity(n, True)
    O = zeros(n, n, True)
    M = sympy.eye(2 * n)
    for _ in range(factors):
        S = exact(_int_symmetric(rng, n, bound))
        choice = int(rng.integers(0, 3))
        if choice == 0:
            step = sympy.Matrix.vstack(sympy.Matrix.hstack(E, S), sympy.Matrix.hstack(O, E))
        elif choice == 1:
            step = sympy.Matrix.vstack(sympy.Matrix.hstack(E, O), sympy.Matrix.hstack(S, E))
        else:
            step = J(n, True)
        M = M @ step
    return SymplecticElement(M)


def random_symplectic(
    rng: np.random.Generator, n: int, *, spread: float = 1.0
) -> SymplecticElement:
    """n(A, B)·t(H)·k with A unit upper triangular, H positive diagonal and k in K."""
    A = np.eye(n) + np.triu(rng.normal(scale=spread, size=(n, n)), 1)
    S = rng.normal(scale=spread, size=(n, n))
    B = ((S + S.T) / 2) @ np.linalg.inv(A.T)
    H = np.diag(np.exp(rng.normal(scale=spread / 2, size=n)))
    q, r = np.linalg.qr(rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n)))
    u = q @ np.diag(np.diag(r) / np.abs(np.diag(r)))
    M = n_factor(A, B) @ t_factor(H) @ unitary_to_k(u)
    return SymplecticElement(M)


def random_heis_exact(rng: np.random.Generator, g: int, h: int, *, bound: int = 3) -> HeisElement:
    lam = exact(rng.integers(-bound, bound + 1, size=(h, g)))
    mu = exact(rng.integers(-bound, bound + 1, size=(h, g)))
    kappa = exact(_int_symmetric(rng, h, bound)) - mu @ lam.T
    return HeisElement(lam, mu, kappa)


def random_heis(rng: np.random.Generator, g: int, h: int, *, spread: float = 1.0) -> HeisElement:
    lam = rng.normal(scale=spread, size=(h, g))
    mu = rng.normal(scale=spread, size=(h, g))
    S = rng.normal(scale=spread, size=(h, h))
    kappa = (S + S.T) / 2 - mu @ lam.T
    return HeisElement(lam, mu, kappa)


def random_siegel_point(rng: np.random.Generator, n: int) -> np.ndarray:
    X = rng.normal(size=(n, n))
    L = rng.normal(size=(n, n))
    Y = L @ L.T + n * np.eye(n) / 2
    return (X + X.T) / 2 + 1j * Y


def random_complex(
    rng: np.random.Generator, rows: int, cols: int, *, symmetric: bool = False
) -> Matrix:
    V = rng.normal(size=(rows, cols)) + 1j * rng.normal(size=(rows, cols))
    return (V + V.T) / 2 if symmetric else V
