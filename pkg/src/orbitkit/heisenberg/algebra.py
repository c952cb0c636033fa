"""Lie algebra of H^{(g,h)}, its dual, the coadjoint action and the form B_F.

Block realizations in sp(g+h,R), blocks ordered (g, h, g, h):

    X(α,β,γ): (1,4) = ^tβ, (2,1) = α, (2,3) = β, (2,4) = γ, (3,4) = −^tα
    F(a,b,c): (1,2) = ^ta, (3,2) = ^tb, (4,1) = b, (4,2) = c, (4,3) = −a

so that tr(F X) = 2σ(^tα a) + 2σ(^tb β) + σ(cγ).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from orbitkit.core.errors import DomainError
from orbitkit.heisenberg.group import HeisElement, heis_embed
from orbitkit.linalg.kinds import (
    Matrix,
    Scalar,
    assemble,
    det,
    exact,
    inverse,
    is_exact,
    is_symmetric,
    matrices_equal,
    null_space,
    rank,
    shape,
    sub_block,
    sym,
    to_float,
    trace,
    unit,
    zeros,
)
from orbitkit.linalg.pfaffian import pfaffian

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HeisLieElement:
    alpha: Matrix
    beta: Matrix
    gamma: Matrix

    @classmethod
    def of(cls, alpha: Matrix, beta: Matrix, gamma: Matrix, tol: float = 1e-12) -> "HeisLieElement":
        h, g = shape(alpha)
        if shape(beta) != (h, g) or shape(gamma) != (h, h):
            raise DomainError("dimension mismatch in X(alpha, beta, gamma)")
        if not is_symmetric(gamma, None if is_exact(gamma) else tol):
            raise DomainError("gamma is not symmetric")
        return cls(alpha, beta, gamma)

    @property
    def dims(self) -> tuple[int, int]:
        h, g = shape(self.alpha)
        return g, h

    def matrix(self) -> Matrix:
        g, h = self.dims
        return assemble(
            (g, h, g, h),
            {
                (0, 3): self.beta.T,
                (1, 0): self.alpha,
                (1, 2): self.beta,
                (1, 3): self.gamma,
                (2, 3): -self.alpha.T,
            },
            is_exact(self.alpha),
        )


@dataclass(frozen=True)
class HeisDual:
    a: Matrix
    b: Matrix
    c: Matrix

    @classmethod
    def of(cls, a: Matrix, b: Matrix, c: Matrix, tol: float = 1e-12) -> "HeisDual":
        h, g = shape(a)
        if shape(b) != (h, g) or shape(c) != (h, h):
            raise DomainError("dimension mismatch in F(a, b, c)")
        if not is_symmetric(c, None if is_exact(c) else tol):
            raise DomainError("c is not symmetric")
        return cls(a, b, c)

    @property
    def dims(self) -> tuple[int, int]:
        h, g = shape(self.a)
        return g, h

    @property
    def exact(self) -> bool:
        return is_exact(self.c)

    def matrix(self) -> Matrix:
        g, h = self.dims
        return assemble(
            (g, h, g, h),
            {
                (0, 1): self.a.T,
                (2, 1): self.b.T,
                (3, 0): self.b,
                (3, 1): self.c,
                (3, 2): -self.a,
            },
            self.exact,
        )

    def equals(self, other: "HeisDual", tol: float | None = None) -> bool:
        return (
            matrices_equal(self.a, other.a, tol)
            and matrices_equal(self.b, other.b, tol)
            and matrices_equal(self.c, other.c, tol)
        )


def project_dual(Phi: Matrix, g: int, h: int) -> HeisDual:
    """The (·)_* part: the unique F(a,b,c) with tr(F X) = tr(Φ X) for every X(α,β,γ)."""
    sizes = (g, h, g, h)

    def blk(i: int, j: int) -> Matrix:
        return sub_block(Phi, sizes, i, j)

    a = (blk(0, 1).T - blk(3, 2)) / 2
    b = (blk(3, 0) + blk(2, 1).T) / 2
    c = sym(blk(3, 1))
    return HeisDual(a, b, c)


def _check(F: HeisDual, *elements: HeisLieElement) -> None:
    for X in elements:
        if X.dims != F.dims:
            raise DomainError({"reason": "dimension mismatch", "dual": F.dims, "element": X.dims})


def heis_pairing(F: HeisDual, X: HeisLieElement) -> Scalar:
    """⟨F, X⟩ = 2σ(^tα a + ^tb β) + σ(cγ)."""
    _check(F, X)
    return 2 * trace(X.alpha.T @ F.a + F.b.T @ X.beta) + trace(F.c @ X.gamma)


def heis_pairing_matrix(F: HeisDual, X: HeisLieElement) -> Scalar:
    """Trace oracle: σ(F_matrix · X_matrix)."""
    return trace(F.matrix() @ X.matrix())


def heis_coadjoint(x: HeisElement, F: HeisDual) -> HeisDual:
    """Ad*(x)F = F(a + cµ, b − cλ, c)."""
    if x.dims != F.dims:
        raise DomainError({"reason": "dimension mismatch", "element": x.dims, "dual": F.dims})
    return HeisDual(F.a + F.c @ x.mu, F.b - F.c @ x.lam, F.c)


def heis_coadjoint_matrix(x: HeisElement, F: HeisDual) -> HeisDual:
    """Conjugate-and-project oracle: (x F x^{-1})_* on the block realizations."""
    g, h = F.dims
    M = heis_embed(x).M
    return project_dual(M @ F.matrix() @ inverse(M), g, h)


def heis_bracket(X: HeisLieElement, Y: HeisLieElement) -> HeisLieElement:
    """[X(α,β,γ), X(δ,ε,ξ)] = X(0, 0, α^tε + ε^tα − β^tδ − δ^tβ)."""
    g, h = X.dims
    ex = is_exact(X.alpha)
    gamma = X.alpha @ Y.beta.T + Y.beta @ X.alpha.T - X.beta @ Y.alpha.T - Y.alpha @ X.beta.T
    return HeisLieElement(zeros(h, g, ex), zeros(h, g, ex), gamma)


def heis_exp(X: HeisLieElement) -> HeisElement:
    """exp X(α,β,γ) = (α, β, γ + ½(α^tβ − β^tα))."""
    return HeisElement(
        X.alpha, X.beta, X.gamma + (X.alpha @ X.beta.T - X.beta @ X.alpha.T) / 2
    )


def heis_bform(F: HeisDual, X: HeisLieElement, Y: HeisLieElement) -> Scalar:
    """B_F(X, Y) = σ{c(α^tε + ε^tα − β^tδ − δ^tβ)}."""
    _check(F, X, Y)
    return trace(F.c @ heis_bracket(X, Y).gamma)


def lie_basis(g: int, h: int, exact_kind: bool = True) -> list[HeisLieElement]:
    """Standard basis: α-directions (row-major), β-directions, then symmetric γ-directions."""
    zero = zeros(h, g, exact_kind)
    zero_c = zeros(h, h, exact_kind)
    basis = [
        HeisLieElement(unit(h, g, i, j, exact_kind), zero, zero_c)
        for i in range(h)
        for j in range(g)
    ]
    basis += [
        HeisLieElement(zero, unit(h, g, i, j, exact_kind), zero_c)
        for i in range(h)
        for j in range(g)
    ]
    for i in range(h):
        for j in range(i, h):
            gamma = unit(h, h, i, j, exact_kind)
            if i != j:
                gamma = gamma + unit(h, h, j, i, exact_kind)
            basis.append(HeisLieElement(zero, zero, gamma))
    return basis


def gram_matrix(F: HeisDual, basis: list[HeisLieElement]) -> Matrix:
    entries = [[heis_bform(F, X, Y) for Y in basis] for X in basis]
    return exact(entries) if F.exact else np.array(entries, dtype=float)


def _combine(basis: list[HeisLieElement], coefficients: Matrix) -> HeisLieElement:
    alpha = sum((coefficients[k] * X.alpha for k, X in enumerate(basis)), basis[0].alpha * 0)
    beta = sum((coefficients[k] * X.beta for k, X in enumerate(basis)), basis[0].beta * 0)
    gamma = sum((coefficients[k] * X.gamma for k, X in enumerate(basis)), basis[0].gamma * 0)
    return HeisLieElement(alpha, beta, gamma)


def heis_radical(F: HeisDual, tol: float | None = None) -> list[HeisLieElement]:
    """rad B_F = {X : B_F(X, ·) = 0}, from the null space of the Gram matrix."""
    g, h = F.dims
    basis = lie_basis(g, h, F.exact)
    gram = gram_matrix(F, basis)
    vectors = null_space(gram, None if F.exact else tol or 1e-10)
    logger.debug("heis_radical: dim g=%d, dim rad=%d", len(basis), len(vectors))
    return [_combine(basis, v) for v in vectors]


def is_nondegenerate(c: Matrix, tol: float = 1e-10) -> bool:
    if is_exact(c):
        return det(c) != 0
    return abs(float(det(to_float(c)))) > tol


def polarization_basis(g: int, h: int, exact_kind: bool = True) -> list[HeisLieElement]:
    """𝔨 = {X(0, β, γ)}: the β- and γ-directions of the standard basis."""
    return lie_basis(g, h, exact_kind)[h * g :]


@dataclass(frozen=True)
class PolarizationReport:
    basis: list[HeisLieElement]
    isotropic: bool
    maximal: bool
    breaking_witnesses: list[tuple[int, int]]

    @property
    def ok(self) -> bool:
        return self.isotropic and self.maximal and len(self.breaking_witnesses) > 0


def heis_polarization_check(c: Matrix, g: int, tol: float = 1e-10) -> PolarizationReport:
    """Verify that 𝔨 = {X(0,β,γ)} is a polarization for F(0,0,c).

    Isotropy: B_F vanishes on 𝔨×𝔨. Maximality: dim 𝔨 = dim rad + hg. Witnesses:
    pairs (α-direction, 𝔨-element) with nonzero B_F, showing that enlarging 𝔨 by any
    α-direction breaks isotropy.
    """
    h = shape(c)[0]
    if not is_nondegenerate(c, tol):
        raise DomainError("polarization check needs nondegenerate c")
    ex = is_exact(c)
    F = HeisDual(zeros(h, g, ex), zeros(h, g, ex), c)
    k_basis = polarization_basis(g, h, ex)
    float_tol = None if ex else tol
    isotropic = all(
        _vanishes(heis_bform(F, X, Y), float_tol) for X in k_basis for Y in k_basis
    )
    radical_dim = len(heis_radical(F, float_tol))
    maximal = len(k_basis) == radical_dim + h * g
    alpha_dirs = lie_basis(g, h, ex)[: h * g]
    witnesses = []
    for i, X in enumerate(alpha_dirs):
        for j, Y in enumerate(k_basis):
            if not _vanishes(heis_bform(F, X, Y), float_tol):
                witnesses.append((i, j))
                break
    if len(witnesses) != len(alpha_dirs):
        maximal = False
    return PolarizationReport(k_basis, isotropic, maximal, witnesses)


def _vanishes(value: Scalar, tol: float | None) -> bool:
    if tol is None:
        return value == 0
    return abs(complex(value)) <= tol


def plancherel_matrix(F: HeisDual) -> Matrix:
    """a_ij = ⟨F, [y_i, y_j]⟩ over the α-directions then the β-directions."""
    g, h = F.dims
    non_central = lie_basis(g, h, F.exact)[: 2 * h * g]
    return gram_matrix(F, non_central)


def plancherel_density(F: HeisDual, tol: float = 1e-10) -> Scalar:
    if not is_nondegenerate(F.c, tol):
        raise DomainError("plancherel density needs nondegenerate c")
    A = plancherel_matrix(F)
    return pfaffian(A, None if F.exact else tol)


def heis_orbit_rank(F: HeisDual, tol: float | None = None) -> int:
    """Rank of the Jacobian of (λ, µ) ↦ Ad*(x)F at the identity.

    Ad* is affine in (λ, µ), so the columns Ad*(e_k)F − F are exact.
    """
    g, h = F.dims
    ex = F.exact
    rows = []
    for k in range(2 * h * g):
        lam = zeros(h, g, ex)
        mu = zeros(h, g, ex)
        i, j = divmod(k % (h * g), g)
        (lam if k < h * g else mu)[i, j] = 1
        moved = heis_coadjoint(HeisElement(lam, mu, zeros(h, h, ex)), F)
        rows.append(_flat(moved.a - F.a) + _flat(moved.b - F.b))
    jacobian = exact(rows) if ex else np.array(rows, dtype=float)
    return rank(jacobian, None if ex else tol or 1e-10)


def _flat(A: Matrix) -> list[Scalar]:
    return list(A) if is_exact(A) else list(np.asarray(A).flatten())


def cyclic_sum(F: HeisDual, X1: HeisLieElement, X2: HeisLieElement, X3: HeisLieElement) -> Scalar:
    """⟨F,[[X₁,X₂],X₃]⟩ + ⟨F,[[X₂,X₃],X₁]⟩ + ⟨F,[[X₃,X₁],X₂]⟩ (closedness of B_F)."""
    return (
        heis_pairing(F, heis_bracket(heis_bracket(X1, X2), X3))
        + heis_pairing(F, heis_bracket(heis_bracket(X2, X3), X1))
        + heis_pairing(F, heis_bracket(heis_bracket(X3, X1), X2))
    )
