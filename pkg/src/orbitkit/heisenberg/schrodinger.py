"""Finite model of the Schrödinger representation on functions of (Z/N)^{(h,g)}.

(π(x)f)(ξ) = ω^{σ(c(κ + µ^tλ + 2ξ^tµ))} f(ξ + λ),  ω = e^{2πi/N}, N odd.

Functions on the grid are indexed lexicographically by the row-major entries of ξ.
Phases are kept as integer indices mod N until the matrix is built, so the group
law and the central character are checked in exact integer arithmetic.
"""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np
import sympy

from orbitkit.core.errors import DomainError

logger = logging.getLogger(__name__)


def _int_matrix(values: object, rows: int, cols: int, name: str) -> np.ndarray:
    array = np.asarray(values, dtype=object)
    if array.shape != (rows, cols):
        raise DomainError({"reason": "dimension mismatch", name: list(array.shape)})
    if not all(float(v) == int(v) for v in array.flat):
        raise DomainError(f"{name} must be an integer matrix")
    return np.array([[int(v) for v in row] for row in array], dtype=np.int64)


@dataclass(frozen=True)
class GridRep:
    N: int
    g: int
    h: int
    c: np.ndarray

    @classmethod
    def of(cls, N: int, g: int, h: int, c: object) -> "GridRep":
        if N < 3 or N % 2 == 0:
            raise DomainError(f"modulus must be odd and at least 3, got {N}")
        if g < 1 or h < 1:
            raise DomainError("g and h must be positive")
        c = _int_matrix(c, h, h, "c") % N
        if not np.array_equal(c, c.T):
            raise DomainError("c must be symmetric")
        determinant = int(sympy.Matrix(c.tolist()).det())
        if math.gcd(determinant % N, N) != 1:
            raise DomainError(
                {"reason": "det c is not invertible mod N", "det": determinant, "N": N}
            )
        return cls(N=N, g=g, h=h, c=c)

    @property
    def dimension(self) -> int:
        return self.N ** (self.h * self.g)

    @cached_property
    def grid(self) -> np.ndarray:
        """All ξ in lexicographic order, shape (N^{hg}, h, g)."""
        points = itertools.product(range(self.N), repeat=self.h * self.g)
        return np.array(list(points), dtype=np.int64).reshape(-1, self.h, self.g)

    def index(self, xi: np.ndarray) -> np.ndarray:
        """Lexicographic index of ξ (last axes h×g), vectorized over leading axes."""
        digits = xi.reshape(*xi.shape[:-2], self.h * self.g) % self.N
        weights = self.N ** np.arange(self.h * self.g - 1, -1, -1, dtype=np.int64)
        return digits @ weights


@dataclass(frozen=True)
class GridHeisElement:
    lam: np.ndarray
    mu: np.ndarray
    kappa: np.ndarray

    @classmethod
    def of(cls, R: GridRep, lam: object, mu: object, kappa: object) -> "GridHeisElement":
        lam = _int_matrix(lam, R.h, R.g, "lambda") % R.N
        mu = _int_matrix(mu, R.h, R.g, "mu") % R.N
        kappa = _int_matrix(kappa, R.h, R.h, "kappa") % R.N
        core = (kappa + mu @ lam.T) % R.N
        if not np.array_equal(core, core.T):
            raise DomainError("kappa + mu^t(lambda) must be symmetric mod N")
        return cls(lam, mu, kappa)

    @property
    def is_central(self) -> bool:
        return not self.lam.any() and not self.mu.any()


def grid_mul(R: GridRep, x: GridHeisElement, y: GridHeisElement) -> GridHeisElement:
    """The ∘-law reduced mod N."""
    return GridHeisElement(
        (x.lam + y.lam) % R.N,
        (x.mu + y.mu) % R.N,
        (x.kappa + y.kappa + x.lam @ y.mu.T - x.mu @ y.lam.T) % R.N,
    )


def phase_indices(R: GridRep, x: GridHeisElement) -> np.ndarray:
    """σ(c(κ + µ^tλ + 2ξ^tµ)) mod N for every grid point ξ."""
    base = int(np.trace(R.c @ (x.kappa + x.mu @ x.lam.T)))
    xi_mu = np.einsum("pij,kj->pik", R.grid, x.mu)
    linear = np.einsum("ik,pki->p", R.c, xi_mu)
    return (base + 2 * linear) % R.N


def central_character(R: GridRep, kappa: object) -> tuple[int, complex]:
    """ω^{σ(cκ)}: the root-of-unity index and its value."""
    kappa = _int_matrix(kappa, R.h, R.h, "kappa")
    index = int(np.trace(R.c @ kappa)) % R.N
    return index, np.exp(2j * np.pi * index / R.N)


def rep_matrix(R: GridRep, x: GridHeisElement) -> np.ndarray:
    """π(x) as a permutation-times-diagonal unitary of size N^{hg}."""
    if x.lam.shape != (R.h, R.g):
        raise DomainError({"reason": "dimension mismatch", "lambda": list(x.lam.shape)})
    rows = np.arange(R.dimension)
    cols = R.index(R.grid + x.lam)
    U = np.zeros((R.dimension, R.dimension), dtype=np.complex128)
    U[rows, cols] = np.exp(2j * np.pi * phase_indices(R, x) / R.N)
    return U


def rep_trace(R: GridRep, x: GridHeisElement) -> complex:
    return complex(np.trace(rep_matrix(R, x)))


def generators(R: GridRep) -> list[GridHeisElement]:
    """Unit λ-shifts followed by unit µ-multipliers; with the center they generate the group."""
    zero = np.zeros((R.h, R.g), dtype=np.int64)
    zero_kappa = np.zeros((R.h, R.h), dtype=np.int64)
    shifts, multipliers = [], []
    for i in range(R.h):
        for j in range(R.g):
            unit = zero.copy()
            unit[i, j] = 1
            shifts.append(GridHeisElement(unit, zero, zero_kappa))
            # κ = −µ^tλ = 0 here, so (0, E_ij, 0) is a valid element.
            multipliers.append(GridHeisElement(zero, unit, zero_kappa))
    return shifts + multipliers


def commutant_dimension(R: GridRep, *, cap: int = 125, tol: float = 1e-9) -> int:
    """dim {M : M π(x) = π(x) M for the generators x}.

    The µ-multipliers are diagonal, so M is supported on pairs (p, q) with identical
    multiplier phases; the λ-shift equations are then solved on that support.
    """
    d = R.dimension
    if d > cap:
        raise DomainError(
            {"reason": "representation exceeds the dimension cap", "size": d, "cap": cap}
        )
    gens = generators(R)
    shifts = [g for g in gens if g.lam.any()]
    multipliers = [g for g in gens if not g.lam.any()]

    signatures = np.stack([phase_indices(R, x) for x in multipliers], axis=1)
    groups: dict[tuple[int, ...], list[int]] = {}
    for p, signature in enumerate(map(tuple, signatures)):
        groups.setdefault(signature, []).append(p)
    support = [(p, q) for members in groups.values() for p in members for q in members]
    logger.debug("commutant_dimension: d=%d, support size %d", d, len(support))

    blocks = []
    for x in shifts:
        U = rep_matrix(R, x)
        columns = np.zeros((d * d, len(support)), dtype=np.complex128)
        for k, (p, q) in enumerate(support):
            delta = np.zeros((d, d), dtype=np.complex128)
            delta[p, :] += U[q, :]
            delta[:, q] -= U[:, p]
            columns[:, k] = delta.reshape(-1)
        blocks.append(columns)
    if not blocks:
        return len(support)
    system = np.vstack(blocks)
    return len(support) - int(np.linalg.matrix_rank(system, tol=tol))
