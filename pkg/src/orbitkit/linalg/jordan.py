"""Additive Jordan decomposition X = X_h + X_e + X_n and element classification."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum

import numpy as np

from orbitkit.core.errors import DomainError, IllConditionedError
from orbitkit.linalg.kinds import Matrix, shape, to_float

logger = logging.getLogger(__name__)

_NEWTON_STEPS = 64


class ElementClass(str, Enum):
    NILPOTENT = "nilpotent"
    HYPERBOLIC = "hyperbolic"
    ELLIPTIC = "elliptic"
    SEMISIMPLE_MIXED = "semisimple-mixed"
    GENERAL = "general"


@dataclass(frozen=True)
class JordanParts:
    hyperbolic: np.ndarray
    elliptic: np.ndarray
    nilpotent: np.ndarray

    @property
    def semisimple(self) -> np.ndarray:
        return self.hyperbolic + self.elliptic


def _real_square(X: Matrix) -> np.ndarray:
    rows, cols = shape(X)
    if rows != cols:
        raise DomainError(f"expected a square matrix, got {rows}x{cols}")
    F = to_float(X)
    if np.iscomplexobj(F):
        if np.max(np.abs(F.imag), initial=0.0) > 0:
            raise DomainError("expected a real matrix")
        F = F.real
    return np.asarray(F, dtype=np.float64)


def _scale(F: np.ndarray) -> float:
    return max(1.0, float(np.linalg.norm(F, 2))) if F.size else 1.0


def eigenvalue_clusters(eigenvalues: np.ndarray, radius: float) -> list[complex]:
    """Single-linkage clusters of the spectrum; returns the cluster means.

    Conjugate clusters get exactly conjugate means so the square-free polynomial
    built from them has real coefficients.
    """
    labels = list(range(len(eigenvalues)))

    def find(i: int) -> int:
        while labels[i] != i:
            labels[i] = labels[labels[i]]
            i = labels[i]
        return i

    for i in range(len(eigenvalues)):
        for j in range(i + 1, len(eigenvalues)):
            if abs(eigenvalues[i] - eigenvalues[j]) <= radius:
                labels[find(i)] = find(j)
    groups: dict[int, list[complex]] = {}
    for i, value in enumerate(eigenvalues):
        groups.setdefault(find(i), []).append(complex(value))
    centers = [complex(np.mean(members)) for members in groups.values()]

    snapped: list[complex] = []
    for center in sorted(centers, key=lambda z: (z.real, z.imag)):
        if abs(center.imag) <= radius:
            snapped.append(complex(center.real, 0.0))
            continue
        partner = next((s for s in snapped if abs(s - center.conjugate()) <= radius), None)
        snapped.append(partner.conjugate() if partner is not None else center)
    return snapped


def _poly_at(centers: list[complex], S: np.ndarray) -> np.ndarray:
    n = S.shape[0]
    result = np.eye(n, dtype=complex)
    for mu in centers:
        result = result @ (S - mu * np.eye(n))
    return result


def _poly_derivative_at(centers: list[complex], S: np.ndarray) -> np.ndarray:
    n = S.shape[0]
    total = np.zeros((n, n), dtype=complex)
    for skip in range(len(centers)):
        term = np.eye(n, dtype=complex)
        for index, mu in enumerate(centers):
            if index != skip:
                term = term @ (S - mu * np.eye(n))
        total += term
    return total


def jordan_decompose(
    X: Matrix, *, separation: float = 1e-8, tol: float = 1e-9
) -> JordanParts:
    """Split a real square matrix into commuting hyperbolic, elliptic and nilpotent parts.

    The semisimple part is the Newton limit S <- S - p(S) p'(S)^{-1} started at X,
    with p the square-free polynomial vanishing on the clustered spectrum. The
    hyperbolic part is Σ Re(μ) P_μ over the spectral projectors of S.

    Raises:
        IllConditionedError: the refinement does not converge or its output fails
            the nilpotency check; this happens when eigenvalues cluster closer than
            the separation tolerance allows to resolve.
    """
    F = _real_square(X)
    n = F.shape[0]
    if n == 0:
        empty = np.zeros((0, 0))
        return JordanParts(empty, empty, empty)
    scale = _scale(F)
    radius = np.sqrt(separation) * scale
    centers = eigenvalue_clusters(np.linalg.eigvals(F), radius)
    logger.debug("jordan_decompose: %d eigenvalue clusters %s", len(centers), centers)

    S = F.astype(complex)
    target = tol * scale ** len(centers)
    for _ in range(_NEWTON_STEPS):
        residual = _poly_at(centers, S)
        if np.max(np.abs(residual)) <= target:
            break
        try:
            S = S - np.linalg.solve(_poly_derivative_at(centers, S), residual)
        except np.linalg.LinAlgError as exc:
            raise IllConditionedError(
                "ill-conditioned decomposition: singular Newton step"
            ) from exc
    else:
        raise IllConditionedError(
            {"reason": "ill-conditioned decomposition", "clusters": [str(c) for c in centers]}
        )

    hyperbolic = np.zeros((n, n), dtype=complex)
    for index, mu in enumerate(centers):
        projector = np.eye(n, dtype=complex)
        for other_index, other in enumerate(centers):
            if other_index != index:
                projector = projector @ (S - other * np.eye(n)) / (mu - other)
        hyperbolic += mu.real * projector

    semisimple = S.real
    hyperbolic = hyperbolic.real
    elliptic = semisimple - hyperbolic
    nilpotent = F - semisimple

    if np.max(np.abs(np.linalg.matrix_power(nilpotent, n))) > tol * scale**n:
        raise IllConditionedError("ill-conditioned decomposition: nilpotent part is not nilpotent")
    return JordanParts(hyperbolic=hyperbolic, elliptic=elliptic, nilpotent=nilpotent)


def classify_element(X: Matrix, *, tol: float = 1e-9, separation: float = 1e-8) -> ElementClass:
    F = _real_square(X)
    n = F.shape[0]
    scale = _scale(F)

    power = np.eye(n)
    ranks = []
    for k in range(1, n + 1):
        power = power @ F
        ranks.append(int(np.linalg.matrix_rank(power, tol=tol * scale**k)) if n else 0)
    if not ranks or ranks[-1] == 0:
        return ElementClass.NILPOTENT

    eigenvalues = np.linalg.eigvals(F)
    centers = eigenvalue_clusters(eigenvalues, np.sqrt(separation) * scale)
    minimal = _poly_at(centers, F.astype(complex))
    if np.max(np.abs(minimal)) > tol * scale ** len(centers):
        return ElementClass.GENERAL
    if np.all(np.abs(eigenvalues.imag) <= tol * scale):
        return ElementClass.HYPERBOLIC
    if np.all(np.abs(eigenvalues.real) <= tol * scale):
        return ElementClass.ELLIPTIC
    return ElementClass.SEMISIMPLE_MIXED
