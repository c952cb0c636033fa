"""Sp(n,R), the Siegel upper half space H_n, and the Cartan and Iwasawa decompositions.

Block convention: M = [[A, B], [C, D]] with n x n blocks, and
J_n = [[0, E_n], [-E_n, 0]]; M is symplectic when ^tM J_n M = J_n.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from orbitkit.core.errors import DomainError
from orbitkit.linalg.expm import matrix_exp, matrix_log_spd, spd_sqrt
from orbitkit.linalg.kinds import (
    Matrix,
    block,
    identity,
    inverse,
    is_exact,
    is_symmetric,
    matrices_equal,
    max_abs,
    shape,
    to_float,
    unit,
    zeros,
)

logger = logging.getLogger(__name__)


def J(n: int, exact_kind: bool = False) -> Matrix:
    E = identity(n, exact_kind)
    O = zeros(n, n, exact_kind)
    return block([[O, E], [-E, O]])


def is_symplectic(M: Matrix, tol: float | None = None) -> bool:
    rows, cols = shape(M)
    if rows != cols or rows % 2:
        return False
    Jn = J(rows // 2, is_exact(M))
    if is_exact(M):
        return matrices_equal(M.T @ Jn @ M, Jn)
    scale = max(1.0, max_abs(M)) ** 2
    return matrices_equal(M.T @ Jn @ M, Jn, tol * scale)


def is_in_sp(X: Matrix, tol: float | None = None) -> bool:
    """Lie algebra membership: ^tX J + J X = 0."""
    rows, cols = shape(X)
    if rows != cols or rows % 2:
        return False
    Jn = J(rows // 2, is_exact(X))
    return matrices_equal(X.T @ Jn + Jn @ X, zeros(rows, rows, is_exact(X)), tol)


def sp_basis(n: int) -> list[Matrix]:
    """Exact basis of sp(n,R): E_ij − E_{n+j,n+i}, then the symmetric b- and c-units for i ≤ j."""
    size = 2 * n
    basis = [
        unit(size, size, i, j) - unit(size, size, n + j, n + i) for i in range(n) for j in range(n)
    ]
    for i in range(n):
        for j in range(i, n):
            upper = unit(size, size, i, n + j)
            lower = unit(size, size, n + i, j)
            if i != j:
                upper = upper + unit(size, size, j, n + i)
                lower = lower + unit(size, size, n + j, i)
            basis += [upper, lower]
    return basis


def sp_coordinates(X: Matrix) -> list:
    """Coordinates of X in sp_basis: the a-block entries, then (b_ij, c_ij) for i ≤ j."""
    n = shape(X)[0] // 2
    coords = [X[i, j] for i in range(n) for j in range(n)]
    for i in range(n):
        for j in range(i, n):
            coords += [X[i, n + j], X[n + i, j]]
    return coords


@dataclass(frozen=True)
class SymplecticElement:
    """An element of Sp(n,R); ``M`` may be an exact or a float matrix."""

    M: Matrix

    @classmethod
    def of(cls, M: Matrix, tol: float = 1e-10) -> "SymplecticElement":
        if not is_symplectic(M, None if is_exact(M) else tol):
            raise DomainError("matrix is not symplectic")
        return cls(M)

    @property
    def n(self) -> int:
        return shape(self.M)[0] // 2

    @property
    def blocks(self) -> tuple[Matrix, Matrix, Matrix, Matrix]:
        n = self.n
        M = self.M
        return M[:n, :n], M[:n, n:], M[n:, :n], M[n:, n:]


@dataclass(frozen=True)
class SiegelPoint:
    Z: np.ndarray

    @classmethod
    def of(cls, Z: Matrix, tol: float = 1e-10) -> "SiegelPoint":
        Z = np.asarray(to_float(Z), dtype=np.complex128)
        rows, cols = Z.shape
        if rows != cols:
            raise DomainError(f"Siegel point must be square, got {rows}x{cols}")
        if not is_symmetric(Z, tol * max(1.0, max_abs(Z))):
            raise DomainError("Siegel point is not symmetric")
        smallest = float(np.linalg.eigvalsh((Z.imag + Z.imag.T) / 2)[0])
        if smallest <= 0:
            raise DomainError({"reason": "Im Z is not positive definite", "eigenvalue": smallest})
        return cls((Z + Z.T) / 2)

    @property
    def n(self) -> int:
        return self.Z.shape[0]


def cartan_involution(g: SymplecticElement) -> SymplecticElement:
    """θ(g) = ^t g^{-1}."""
    return SymplecticElement(inverse(g.M).T)


def cartan_involution_lie(X: Matrix) -> Matrix:
    """dθ(X) = -^tX."""
    return -X.T


def cartan_decompose(
    g: SymplecticElement, tol: float = 1e-10
) -> tuple[SymplecticElement, np.ndarray]:
    """g = k·exp(X) with k in K and X in 𝔭, from the polar decomposition."""
    M = to_float(g.M)
    P = spd_sqrt(M.T @ M, tol)
    X = matrix_log_spd(P, tol)
    k = M @ np.linalg.inv(P)
    return SymplecticElement(k), (X + X.T) / 2


def project_to_p(X: Matrix) -> np.ndarray:
    """Nearest element of 𝔭 = {[[a, b], [b, -a]] : a, b symmetric}."""
    F = to_float(X)
    n = F.shape[0] // 2
    a = (F[:n, :n] - F[n:, n:]) / 2
    b = (F[:n, n:] + F[n:, :n]) / 2
    a = (a + a.T) / 2
    b = (b + b.T) / 2
    return np.block([[a, b], [b, -a]])


def k_to_unitary(k: Matrix) -> np.ndarray:
    """[[A, B], [-B, A]] ↦ A + iB."""
    F = to_float(k)
    n = F.shape[0] // 2
    return F[:n, :n] + 1j * F[:n, n:]


def unitary_to_k(u: np.ndarray) -> np.ndarray:
    A, B = u.real, u.imag
    return np.block([[A, B], [-B, A]])


def is_in_k(k: Matrix, tol: float) -> bool:
    F = to_float(k)
    n = F.shape[0] // 2
    return (
        is_symplectic(F, tol)
        and matrices_equal(F.T @ F, np.eye(2 * n), tol)
        and matrices_equal(F[:n, :n], F[n:, n:], tol)
        and matrices_equal(F[:n, n:], -F[n:, :n], tol)
    )


def p_to_symm(Y: Matrix) -> np.ndarray:
    """The isomorphism of 𝔭 onto complex symmetric matrices, ½[[B, A], [A, -B]] ↦ A + iB."""
    F = to_float(Y)
    n = F.shape[0] // 2
    return 2 * F[:n, n:] + 2j * F[:n, :n]


def renormalize(g: SymplecticElement, tol: float = 1e-10) -> SymplecticElement:
    """Re-project a drifted element onto Sp(n,R) through its Cartan factors."""
    k, X = cartan_decompose(g, tol)
    u = k_to_unitary(k.M)
    left, _, right = np.linalg.svd(u)
    k_clean = unitary_to_k(left @ right)
    return SymplecticElement(k_clean @ matrix_exp(project_to_p(X)))


def moebius_action(
    g: SymplecticElement, point: SiegelPoint, *, degeneracy_tol: float = 1e-12, tol: float = 1e-9
) -> SiegelPoint:
    """M<Z> = (AZ + B)(CZ + D)^{-1}."""
    A, B, C, D = (to_float(b) for b in g.blocks)
    denominator = C @ point.Z + D
    determinant = np.linalg.det(denominator)
    if abs(determinant) < degeneracy_tol:
        raise DomainError({"reason": "numerical degeneracy", "det(CZ+D)": abs(determinant)})
    image = (A @ point.Z + B) @ np.linalg.inv(denominator)
    return SiegelPoint.of(image, tol)


def n_factor(A: Matrix, B: Matrix) -> Matrix:
    """n(A, B) = [[A, B], [0, ^tA^{-1}]]."""
    n = shape(A)[0]
    return block([[A, B], [zeros(n, n, is_exact(A)), inverse(A).T]])


def t_factor(H: Matrix) -> Matrix:
    """t(H) = diag(H, H^{-1})."""
    n = shape(H)[0]
    O = zeros(n, n, is_exact(H))
    return block([[H, O], [O, inverse(H)]])


@dataclass(frozen=True)
class IwasawaFactors:
    """M = n(A, B)·t(H)·k."""

    A: np.ndarray
    B: np.ndarray
    H: np.ndarray
    k: np.ndarray

    @property
    def nil(self) -> np.ndarray:
        return n_factor(self.A, self.B)

    @property
    def diag(self) -> np.ndarray:
        return t_factor(self.H)

    @property
    def compact(self) -> np.ndarray:
        return self.k

    def product(self) -> np.ndarray:
        return self.nil @ self.diag @ self.k

    def validity(self, tol: float) -> dict[str, bool]:
        n = self.A.shape[0]
        return {
            "A_unit_upper": bool(
                np.allclose(np.tril(self.A, -1), 0.0, atol=tol)
                and np.allclose(np.diag(self.A), 1.0, atol=tol)
            ),
            "A_tB_symmetric": matrices_equal(self.A @ self.B.T, self.B @ self.A.T, tol),
            "H_positive_diagonal": bool(
                np.allclose(self.H, np.diag(np.diag(self.H)), atol=tol)
                and np.all(np.diag(self.H) > 0)
            ),
            "k_in_K": is_in_k(self.k, tol) if n else True,
        }


def iwasawa_decompose(g: SymplecticElement, tol: float = 1e-9) -> IwasawaFactors:
    """Iwasawa factors from the image of iE_n.

    Y = Im M<iE> is written A H² ^tA with A unit upper triangular by a Cholesky
    factorization of the reversed matrix; then B = X ^tA^{-1} and
    k = (n(A, B) t(H))^{-1} M.
    """
    n = g.n
    M = to_float(g.M)
    Z = moebius_action(SymplecticElement(M), SiegelPoint(1j * np.eye(n)), tol=tol).Z
    X, Y = Z.real, Z.imag
    reverse = np.eye(n)[::-1]
    try:
        lower = scipy.linalg.cholesky(reverse @ Y @ reverse, lower=True)
    except np.linalg.LinAlgError as exc:
        raise DomainError("internal error: Im M<iE> is not positive definite") from exc
    upper = reverse @ lower @ reverse
    h = np.diag(upper).copy()
    A = upper / h
    H = np.diag(h)
    B = X @ np.linalg.inv(A.T)
    k = np.linalg.inv(n_factor(A, B) @ t_factor(H)) @ M
    logger.debug("iwasawa_decompose: n=%d, diag(H)=%s", n, h)
    return IwasawaFactors(A=A, B=B, H=H, k=k)
