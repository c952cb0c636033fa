"""sl(2)-triples: standard, Cayley and normal flavors, the Cayley transform,
Jacobson–Morozov completion and the triple-level Kostant–Sekiguchi pairing E ↔ x.

Conventions:
    θ₀(Z) = −^tZ, complex-linear, on sl(2,C) and for the Cayley/normal predicates.
    θ(Z) = −^t Z̄ on the ambient when testing θ-equivariance of a morphism.
    σ(Z) = Z̄ entrywise.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache

import numpy as np
import sympy

from orbitkit.core.errors import DomainError
from orbitkit.linalg.kinds import (
    Matrix,
    commutator,
    conj,
    exact,
    is_exact,
    is_zero,
    matrices_equal,
    residual,
    shape,
    to_float,
    unit,
)
from orbitkit.symplectic import J, sp_basis

logger = logging.getLogger(__name__)

I = sympy.I


class AmbientKind(str, Enum):
    SL = "sl"
    SP = "sp"


@dataclass(frozen=True)
class Ambient:
    """sl(n) acts on n×n matrices; sp(2n) on 2n×2n matrices in the [[a, b], [c, −^ta]] form."""

    kind: AmbientKind
    n: int

    @property
    def size(self) -> int:
        return self.n if self.kind is AmbientKind.SL else 2 * self.n

    def contains(self, X: Matrix, tol: float | None = None) -> bool:
        if shape(X) != (self.size, self.size):
            return False
        if self.kind is AmbientKind.SL:
            value = X.trace() if is_exact(X) else complex(to_float(X).trace())
            return value == 0 if tol is None else abs(value) <= tol
        Jn = J(self.n, is_exact(X))
        return is_zero(X.T @ Jn + Jn @ X, tol)

    def basis(self) -> list[sympy.Matrix]:
        size = self.size
        if self.kind is AmbientKind.SL:
            basis = [unit(size, size, i, j) for i in range(size) for j in range(size) if i != j]
            basis += [
                unit(size, size, i, i) - unit(size, size, i + 1, i + 1) for i in range(size - 1)
            ]
            return basis
        return sp_basis(self.n)


@dataclass(frozen=True)
class Sl2Triple:
    H: Matrix
    X: Matrix
    Y: Matrix
    ambient: Ambient | None = field(default=None)


@dataclass(frozen=True)
class TripleFlavor:
    is_cayley: bool
    is_normal: bool


@dataclass(frozen=True)
class MorphismFlags:
    real: bool
    theta: bool


def theta0(Z: Matrix) -> Matrix:
    return -Z.T


def theta_ambient(Z: Matrix) -> Matrix:
    return -conj(Z).T


def _tol(t: Sl2Triple, tol: float | None) -> float | None:
    exact_kind = all(is_exact(M) for M in (t.H, t.X, t.Y))
    if exact_kind:
        return None
    return 1e-10 if tol is None else tol


def standard_basis() -> Sl2Triple:
    """(H₀, E₀, F₀)."""
    H0 = sympy.Matrix([[1, 0], [0, -1]])
    E0 = sympy.Matrix([[0, 1], [0, 0]])
    F0 = sympy.Matrix([[0, 0], [1, 0]])
    return Sl2Triple(H0, E0, F0, Ambient(AmbientKind.SL, 2))


def normal_basis() -> Sl2Triple:
    """(h₀, x₀, y₀) with h₀ = [[0, i], [−i, 0]].

    x₀ = ½[[1, −i], [−i, −1]] and y₀ = ½[[1, i], [i, −1]].
    """
    h0 = sympy.Matrix([[0, I], [-I, 0]])
    x0 = sympy.Matrix([[1, -I], [-I, -1]]) / 2
    y0 = sympy.Matrix([[1, I], [I, -1]]) / 2
    return Sl2Triple(h0, x0, y0, Ambient(AmbientKind.SL, 2))


def check_relations(t: Sl2Triple) -> dict[str, float]:
    """Residuals of [H,X] = 2X, [H,Y] = −2Y and [X,Y] = H."""
    return {
        "[H,X]=2X": residual(commutator(t.H, t.X), 2 * t.X),
        "[H,Y]=-2Y": residual(commutator(t.H, t.Y), -2 * t.Y),
        "[X,Y]=H": residual(commutator(t.X, t.Y), t.H),
    }


def is_triple(t: Sl2Triple, tol: float | None = None) -> bool:
    tol = _tol(t, tol)
    return (
        matrices_equal(commutator(t.H, t.X), 2 * t.X, tol)
        and matrices_equal(commutator(t.H, t.Y), -2 * t.Y, tol)
        and matrices_equal(commutator(t.X, t.Y), t.H, tol)
    )


def cayley_failures(t: Sl2Triple, tol: float | None = None) -> list[str]:
    tol = _tol(t, tol)
    failures = []
    if not matrices_equal(theta0(t.H), -t.H, tol):
        failures.append("θ(H) = −H")
    if not matrices_equal(theta0(t.X), -t.Y, tol):
        failures.append("θ(X) = −Y")
    if not matrices_equal(theta0(t.Y), -t.X, tol):
        failures.append("θ(Y) = −X")
    return failures


def is_cayley(t: Sl2Triple, tol: float | None = None) -> bool:
    return not cayley_failures(t, tol)


def is_normal(t: Sl2Triple, tol: float | None = None) -> bool:
    """H ∈ 𝔨_C (θ₀H = H) and X, Y ∈ 𝔭_C (θ₀X = −X, θ₀Y = −Y)."""
    tol = _tol(t, tol)
    return (
        matrices_equal(theta0(t.H), t.H, tol)
        and matrices_equal(theta0(t.X), -t.X, tol)
        and matrices_equal(theta0(t.Y), -t.Y, tol)
    )


def triple_flavor(t: Sl2Triple, tol: float | None = None) -> TripleFlavor:
    return TripleFlavor(is_cayley=is_cayley(t, tol), is_normal=is_normal(t, tol))


def _imaginary_unit(t: Sl2Triple) -> object:
    return I if is_exact(t.H) else 1j


def cayley_transform(t: Sl2Triple, tol: float | None = None) -> Sl2Triple:
    """H' = i(X − Y), X' = ½(X + Y + iH), Y' = ½(X + Y − iH)."""
    failures = cayley_failures(t, tol)
    if failures:
        raise DomainError({"reason": "triple is not Cayley", "failed": failures})
    i = _imaginary_unit(t)
    H = i * (t.X - t.Y)
    X = (t.X + t.Y + i * t.H) / 2
    Y = (t.X + t.Y - i * t.H) / 2
    if is_exact(H):
        H, X, Y = (M.applyfunc(sympy.expand) for M in (H, X, Y))
    return Sl2Triple(H, X, Y, t.ambient)


def _min_norm_solve(A: sympy.Matrix, b: sympy.Matrix) -> sympy.Matrix:
    """Minimum-norm solution of a consistent system: x = A^H w with (A A^H) w = b."""
    AH = A.H
    try:
        solution, params = (A @ AH).gauss_jordan_solve(b)
    except ValueError as exc:
        raise DomainError("linear system is inconsistent") from exc
    solution = solution.subs({p: 0 for p in params})
    return (AH @ solution).applyfunc(sympy.expand)


def _flatten(M: sympy.Matrix) -> sympy.Matrix:
    return M.reshape(M.rows * M.cols, 1)


def jacobson_morozov(E: Matrix, ambient: Ambient) -> Sl2Triple:
    """Complete a nonzero nilpotent E to a standard triple (H, E, Y).

    Step 1 solves [E, [E, Z]] = −2E for Z and sets H = [E, Z], so H lies in im(ad E)
    and [H, E] = 2E. Step 2 solves [E, Y] = H and [H, Y] = −2Y. Both solves run over
    the ambient basis in exact arithmetic and take the minimum-norm solution.
    """
    E = exact(E)
    if is_zero(E):
        raise DomainError("Jacobson–Morozov needs a nonzero nilpotent")
    if not is_zero(E ** E.rows):
        raise DomainError("input is not nilpotent")
    if not ambient.contains(E):
        raise DomainError(f"input is not in {ambient.kind.value}({ambient.size})")
    basis = ambient.basis()

    step1 = sympy.Matrix.hstack(*[_flatten(commutator(E, commutator(E, b))) for b in basis])
    z = _min_norm_solve(step1, _flatten(-2 * E))
    Z = sum((z[k] * b for k, b in enumerate(basis)), sympy.zeros(E.rows, E.cols))
    H = commutator(E, Z)

    step2 = sympy.Matrix.vstack(
        sympy.Matrix.hstack(*[_flatten(commutator(E, b)) for b in basis]),
        sympy.Matrix.hstack(*[_flatten(commutator(H, b) + 2 * b) for b in basis]),
    )
    rhs = sympy.Matrix.vstack(_flatten(H), sympy.zeros(E.rows * E.cols, 1))
    y = _min_norm_solve(step2, rhs)
    Y = sum((y[k] * b for k, b in enumerate(basis)), sympy.zeros(E.rows, E.cols))

    triple = Sl2Triple(H, E, Y, ambient)
    if not is_triple(triple):
        raise DomainError(
            {"reason": "completion failed the bracket relations", **check_relations(triple)}
        )
    logger.debug("jacobson_morozov: H eigenvalues %s", H.eigenvals())
    return triple


@lru_cache(maxsize=1)
def _x0_expansion_holds() -> bool:
    s = standard_basis()
    return matrices_equal(s.H / 2 - I * (s.X + s.Y) / 2, normal_basis().X)


def kostant_h(t: Sl2Triple) -> Matrix:
    """φ(h₀) = i(X − Y)."""
    return _imaginary_unit(t) * (t.X - t.Y)


def sekiguchi_image(t: Sl2Triple, tol: float | None = None) -> Matrix:
    """x = φ(x₀) = ½(H − i(X + Y)) for the morphism φ: (H₀, E₀, F₀) ↦ (H, X, Y)."""
    if not _x0_expansion_holds():
        raise DomainError("internal error: x₀ expansion in the standard basis failed")
    if not is_triple(t, tol):
        raise DomainError({"reason": "invalid triple", **check_relations(t)})
    x = (t.H - _imaginary_unit(t) * (t.X + t.Y)) / 2
    return x.applyfunc(sympy.expand) if is_exact(x) else x


def morphism_class(t: Sl2Triple, tol: float | None = None) -> MorphismFlags:
    """σ- and θ-equivariance of φ checked on the generators H₀, E₀, F₀."""
    tol = _tol(t, tol)
    real = all(matrices_equal(conj(M), M, tol) for M in (t.H, t.X, t.Y))
    theta = (
        matrices_equal(theta_ambient(t.H), -t.H, tol)
        and matrices_equal(theta_ambient(t.X), -t.Y, tol)
        and matrices_equal(theta_ambient(t.Y), -t.X, tol)
    )
    return MorphismFlags(real=real, theta=theta)


def is_nilpotent(x: Matrix, tol: float | None = None) -> bool:
    """x^size = 0; exact for exact carriers."""
    size = shape(x)[0]
    if is_exact(x):
        return is_zero((x ** size).applyfunc(sympy.expand))
    return is_zero(np.linalg.matrix_power(to_float(x), size), 1e-9 if tol is None else tol)
