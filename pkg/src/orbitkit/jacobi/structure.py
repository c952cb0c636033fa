"""The Killing form of sp(n,ℝ) and the complex structure I^J on T_(iE,0) H_{n,m}."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np
import sympy

from orbitkit.core.errors import DomainError
from orbitkit.jacobi.basis import Gen, basis_table
from orbitkit.linalg.kinds import Matrix, is_exact, is_symmetric, matrices_equal, shape, sub_block
from orbitkit.symplectic import sp_basis, sp_coordinates

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class KillingReport:
    n: int
    coefficient: int
    checks: int
    failures: list[tuple[int, int]] = field(default_factory=list)
    gram: list[list[int]] = field(default_factory=list, repr=False)

    @property
    def passed(self) -> bool:
        return not self.failures


def _int_coordinates(X: sympy.Matrix) -> np.ndarray:
    return np.array([int(v) for v in sp_coordinates(X)], dtype=np.int64)


def ad_matrices(n: int) -> list[np.ndarray]:
    """ad X in the coordinates of sp_basis, one integer matrix per basis element."""
    basis = sp_basis(n)
    return [np.column_stack([_int_coordinates(X @ b - b @ X) for b in basis]) for X in basis]


def killing_form(n: int) -> np.ndarray:
    """Gram matrix tr(ad X_a ad X_b) over sp_basis(n)."""
    ads = ad_matrices(n)
    return np.array([[int(np.trace(a @ b)) for b in ads] for a in ads], dtype=np.int64)


def killing_check(n: int) -> KillingReport:
    """tr(ad X ad Y) = 2(n+1) σ(XY) on every pair of basis elements, in integer arithmetic."""
    if not 1 <= n <= 3:
        raise DomainError({"reason": "killing_check runs for 1 <= n <= 3", "n": n})
    basis = sp_basis(n)
    coefficient = 2 * (n + 1)
    gram = killing_form(n)
    failures = []
    for a, X in enumerate(basis):
        for b, Y in enumerate(basis):
            if gram[a, b] != coefficient * int((X @ Y).trace()):
                failures.append((a, b))
    logger.debug("killing_check(n=%d): %d pairs, %d failures", n, len(basis) ** 2, len(failures))
    return KillingReport(n, coefficient, len(basis) ** 2, failures, gram.tolist())


@dataclass(frozen=True)
class TangentVector:
    """Tangent data ((Y X; X −Y), (P, Q)) at (iE_n, 0), with Y and X symmetric n×n, P and Q m×n."""

    Y: Matrix
    X: Matrix
    P: Matrix
    Q: Matrix

    @classmethod
    def of(cls, Y: Matrix, X: Matrix, P: Matrix, Q: Matrix, tol: float = 1e-12) -> "TangentVector":
        n, _ = shape(Y)
        m, cols = shape(P)
        if shape(X) != (n, n) or cols != n or shape(Q) != (m, n):
            raise DomainError(
                {
                    "reason": "dimension mismatch",
                    "Y": shape(Y),
                    "X": shape(X),
                    "P": shape(P),
                    "Q": shape(Q),
                }
            )
        for name, S in (("Y", Y), ("X", X)):
            if not is_symmetric(S, None if is_exact(S) else tol):
                raise DomainError(f"{name} is not symmetric")
        return cls(Y, X, P, Q)

    @property
    def dims(self) -> tuple[int, int]:
        m, n = shape(self.P)
        return n, m

    def __neg__(self) -> "TangentVector":
        return TangentVector(-self.Y, -self.X, -self.P, -self.Q)

    def scale(self, c: object) -> "TangentVector":
        return TangentVector(c * self.Y, c * self.X, c * self.P, c * self.Q)

    def equals(self, other: "TangentVector", tol: float | None = None) -> bool:
        return all(
            matrices_equal(a, b, tol)
            for a, b in zip((self.Y, self.X, self.P, self.Q), (other.Y, other.X, other.P, other.Q))
        )


def complex_structure(v: TangentVector) -> TangentVector:
    """I^J: ((Y X; X −Y), (P, Q)) ↦ ((X −Y; −Y −X), (Q, −P))."""
    return TangentVector(v.X, -v.Y, v.Q, -v.P)


def complex_coordinates(v: TangentVector) -> tuple[Matrix, Matrix]:
    """(X + iY, Q + iP); I^J acts on them as multiplication by i."""
    i = sympy.I if is_exact(v.Y) else 1j
    return v.X + i * v.Y, v.Q + i * v.P


def tangent_of(L: Matrix, n: int, m: int) -> TangentVector:
    """Read an element of 𝔭^J (or of 𝔭^J_ℂ) as tangent data: A ↦ Y, B ↦ X, D ↦ P, D̂ ↦ Q."""
    sizes = (n, m, n, m)
    return TangentVector(
        sub_block(L, sizes, 0, 0),
        sub_block(L, sizes, 0, 2),
        sub_block(L, sizes, 1, 0),
        sub_block(L, sizes, 1, 2),
    )


def eigenvector_check(n: int, m: int) -> dict[str, bool]:
    """X⁺, Y⁺ are +i eigenvectors of I^J and X⁻, Y⁻ are −i eigenvectors, exactly."""
    table = basis_table(n, m)
    verdict = {}
    eigenvalues = (("X+", sympy.I), ("Y+", sympy.I), ("X-", -sympy.I), ("Y-", -sympy.I))
    for family, eigenvalue in eigenvalues:
        gens: list[Gen] = table.family(family)
        verdict[family] = all(
            complex_structure(v).equals(v.scale(eigenvalue))
            for v in (tangent_of(table[g], n, m) for g in gens)
        )
    return verdict
