"""The Heisenberg group H^{(g,h)}: ∘- and ⋄-coordinates, the embedding into Sp(g+h,R),
the Mackey splitting and the S-orbits on the dual of the normal subgroup."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from orbitkit.core.errors import DomainError
from orbitkit.linalg.kinds import (
    Matrix,
    assemble,
    identity,
    is_exact,
    is_symmetric,
    is_zero,
    matrices_equal,
    max_abs,
    rank,
    shape,
    zeros,
)
from orbitkit.symplectic import SymplecticElement

SYMMETRY_TOL = 1e-12


@dataclass(frozen=True)
class HeisElement:
    """(λ, µ, κ) in ∘-coordinates; λ, µ are h×g and κ is h×h with κ + µ^tλ symmetric."""

    lam: Matrix
    mu: Matrix
    kappa: Matrix

    @classmethod
    def of(cls, lam: Matrix, mu: Matrix, kappa: Matrix, tol: float = SYMMETRY_TOL) -> "HeisElement":
        h, g = shape(lam)
        if shape(mu) != (h, g) or shape(kappa) != (h, h):
            raise DomainError(
                {"reason": "dimension mismatch", "lambda": shape(lam), "mu": shape(mu),
                 "kappa": shape(kappa)}
            )
        x = cls(lam, mu, kappa)
        core = kappa + mu @ lam.T
        scale = max(1.0, max_abs(core))
        if not is_symmetric(core, None if is_exact(core) else tol * scale):
            raise DomainError("kappa + mu^t(lambda) is not symmetric")
        return x

    @classmethod
    def identity(cls, g: int, h: int, exact_kind: bool = True) -> "HeisElement":
        return cls(zeros(h, g, exact_kind), zeros(h, g, exact_kind), zeros(h, h, exact_kind))

    @property
    def dims(self) -> tuple[int, int]:
        h, g = shape(self.lam)
        return g, h

    @property
    def exact(self) -> bool:
        return is_exact(self.lam)

    def equals(self, other: "HeisElement", tol: float | None = None) -> bool:
        return (
            self.dims == other.dims
            and matrices_equal(self.lam, other.lam, tol)
            and matrices_equal(self.mu, other.mu, tol)
            and matrices_equal(self.kappa, other.kappa, tol)
        )


def _check_dims(x: HeisElement, y: HeisElement) -> None:
    if x.dims != y.dims:
        raise DomainError({"reason": "dimension mismatch", "left": x.dims, "right": y.dims})


def heis_mul(x: HeisElement, y: HeisElement) -> HeisElement:
    """(λ,µ,κ)∘(λ',µ',κ') = (λ+λ', µ+µ', κ+κ'+λ^tµ'−µ^tλ')."""
    _check_dims(x, y)
    return HeisElement(
        x.lam + y.lam,
        x.mu + y.mu,
        x.kappa + y.kappa + x.lam @ y.mu.T - x.mu @ y.lam.T,
    )


def heis_inv(x: HeisElement) -> HeisElement:
    return HeisElement(-x.lam, -x.mu, -x.kappa + x.lam @ x.mu.T - x.mu @ x.lam.T)


def from_bracket(lam: Matrix, mu: Matrix, kappa: Matrix) -> HeisElement:
    """[λ,µ,κ] := (0,µ,κ)∘(λ,0,0) = (λ, µ, κ − µ^tλ)."""
    return HeisElement(lam, mu, kappa - mu @ lam.T)


def to_bracket(x: HeisElement) -> tuple[Matrix, Matrix, Matrix]:
    return x.lam, x.mu, x.kappa + x.mu @ x.lam.T


def diamond_mul(
    left: tuple[Matrix, Matrix, Matrix], right: tuple[Matrix, Matrix, Matrix]
) -> tuple[Matrix, Matrix, Matrix]:
    """[λ,µ,κ]⋄[λ₀,µ₀,κ₀] = [λ+λ₀, µ+µ₀, κ+κ₀+λ^tµ₀+µ₀^tλ]."""
    lam, mu, kappa = left
    lam0, mu0, kappa0 = right
    if shape(lam) != shape(lam0):
        raise DomainError(
            {"reason": "dimension mismatch", "left": shape(lam), "right": shape(lam0)}
        )
    return lam + lam0, mu + mu0, kappa + kappa0 + lam @ mu0.T + mu0 @ lam.T


def diamond_inv(bracket: tuple[Matrix, Matrix, Matrix]) -> tuple[Matrix, Matrix, Matrix]:
    lam, mu, kappa = bracket
    return -lam, -mu, -kappa + lam @ mu.T + mu @ lam.T


def heis_embed(x: HeisElement) -> SymplecticElement:
    """The block matrix in Sp(g+h,R), blocks ordered (g, h, g, h):

        [[E_g, 0,   0,   ^tµ ],
         [λ,   E_h, µ,   κ   ],
         [0,   0,   E_g, −^tλ],
         [0,   0,   0,   E_h ]]
    """
    g, h = x.dims
    ex = x.exact
    M = assemble(
        (g, h, g, h),
        {
            (0, 0): identity(g, ex),
            (0, 3): x.mu.T,
            (1, 0): x.lam,
            (1, 1): identity(h, ex),
            (1, 2): x.mu,
            (1, 3): x.kappa,
            (2, 2): identity(g, ex),
            (2, 3): -x.lam.T,
            (3, 3): identity(h, ex),
        },
        ex,
    )
    return SymplecticElement(M)


def mackey_split(x: HeisElement) -> tuple[HeisElement, HeisElement]:
    """x = k_x ∘ s_x with k_x = (0, µ, κ+µ^tλ) in K and s_x = (λ, 0, 0) in S."""
    g, h = x.dims
    ex = x.exact
    k_part = HeisElement(zeros(h, g, ex), x.mu, x.kappa + x.mu @ x.lam.T)
    s_part = HeisElement(x.lam, zeros(h, g, ex), zeros(h, h, ex))
    return k_part, s_part


class DualOrbitKind(str, Enum):
    TYPE_I = "TypeI"
    TYPE_II = "TypeII"
    TYPE_III = "TypeIII"


@dataclass(frozen=True)
class DualOrbitClass:
    kind: DualOrbitKind
    stabilizer_dim: int


def dual_s_action(lam: Matrix, mu_hat: Matrix, kappa_hat: Matrix) -> tuple[Matrix, Matrix]:
    """S acts on K̂ by (µ̂, κ̂) ↦ (µ̂ + 2κ̂λ, κ̂)."""
    return mu_hat + 2 * kappa_hat @ lam, kappa_hat


def classify_dual_orbit(
    mu_hat: Matrix, kappa_hat: Matrix, tol: float | None = None
) -> DualOrbitClass:
    """Type of the S-orbit through (µ̂, κ̂).

    The orbit map λ ↦ 2κ̂λ has rank g·rank(κ̂), so the stabilizer has
    dimension hg − g·rank(κ̂).
    """
    h, g = shape(mu_hat)
    if shape(kappa_hat) != (h, h):
        raise DomainError({"reason": "dimension mismatch", "kappa_hat": shape(kappa_hat)})
    exact_kind = is_exact(kappa_hat)
    if not exact_kind and tol is None:
        tol = SYMMETRY_TOL
    if not is_symmetric(kappa_hat, None if exact_kind else tol):
        raise DomainError("kappa_hat is not symmetric")
    r = rank(kappa_hat, None if exact_kind else tol)
    stabilizer_dim = h * g - g * r
    if is_zero(kappa_hat, None if exact_kind else tol):
        kind = DualOrbitKind.TYPE_III
    elif r == h:
        kind = DualOrbitKind.TYPE_I
    else:
        kind = DualOrbitKind.TYPE_II
    return DualOrbitClass(kind=kind, stabilizer_dim=stabilizer_dim)
