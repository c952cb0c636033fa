"""The slash action f ↦ f|_{k,𝓜}[g] of G^J on functions on H_{n,m}, with ρ = det^k."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable

import numpy as np
import sympy

from orbitkit.core.errors import DomainError
from orbitkit.jacobi.group import JacobiElement, JacobiPoint, jacobi_action
from orbitkit.linalg.kinds import exact, is_symmetric, shape, to_float

logger = logging.getLogger(__name__)

JacobiFunction = Callable[[JacobiPoint], complex]


@dataclass(frozen=True)
class SlashContext:
    """Weight k and index 𝓜.

    𝓜 is exact, symmetric and positive semidefinite, with 2𝓜 integral and integral diagonal.
    """

    n: int
    m: int
    k: int
    index: sympy.Matrix

    @classmethod
    def of(cls, n: int, m: int, k: int, index: object) -> "SlashContext":
        M = exact(index)
        if shape(M) != (m, m):
            raise DomainError({"reason": "index must be m × m", "m": m, "index": shape(M)})
        if not is_symmetric(M):
            raise DomainError("index is not symmetric")
        if any(not (2 * v).is_integer for v in M) or any(not M[a, a].is_integer for a in range(m)):
            raise DomainError("index must be half-integral: 2𝓜 integral with integral diagonal")
        if np.linalg.eigvalsh(to_float(M)).min() < -1e-12:
            raise DomainError("index is not positive semidefinite")
        return cls(n, m, int(k), M)

    @property
    def index_float(self) -> np.ndarray:
        return to_float(self.index)


def _bracket(M: np.ndarray, V: np.ndarray) -> np.ndarray:
    """𝓜[V] = ^tV 𝓜 V."""
    return V.T @ M @ V


def automorphic_factor(
    ctx: SlashContext, g: JacobiElement, pt: JacobiPoint, *, degeneracy_tol: float = 1e-12
) -> complex:
    """J(g, (Z, W)) with (f|[g])(Z, W) = J(g, (Z, W))⁻¹ f(g·(Z, W)).

    J = e^{2πiσ(𝓜[W+λZ+µ](CZ+D)⁻¹C)} · e^{−2πiσ(𝓜(λZ^tλ + 2λ^tW + κ + µ^tλ))} · det(CZ+D)^k.
    """
    if g.dims != (ctx.n, ctx.m) or pt.dims != (ctx.n, ctx.m):
        raise DomainError(
            {
                "reason": "dimension mismatch",
                "context": (ctx.n, ctx.m),
                "element": g.dims,
                "point": pt.dims,
            }
        )
    x = g.as_float()
    _, _, C, D = (to_float(b) for b in x.M.blocks)
    lam, mu, kappa = (to_float(v) for v in (x.heis.lam, x.heis.mu, x.heis.kappa))
    Z, W = pt.Z.Z, pt.W
    M = ctx.index_float
    denominator = C @ Z + D
    determinant = np.linalg.det(denominator)
    if abs(determinant) < degeneracy_tol:
        raise DomainError({"reason": "numerical degeneracy", "det(CZ+D)": abs(determinant)})
    shifted = W + lam @ Z + mu
    first = np.trace(_bracket(M, shifted) @ np.linalg.solve(denominator, C))
    second = np.trace(M @ (lam @ Z @ lam.T + 2 * lam @ W.T + kappa + mu @ lam.T))
    return complex(np.exp(2j * np.pi * first) * np.exp(-2j * np.pi * second) * determinant**ctx.k)


def slash(
    ctx: SlashContext,
    f: JacobiFunction,
    g: JacobiElement,
    pt: JacobiPoint,
    *,
    degeneracy_tol: float = 1e-12,
) -> complex:
    """(f|_{k,𝓜}[g])(Z, W); a right action: (f|[g₁])|[g₂] = f|[g₁g₂]."""
    factor = automorphic_factor(ctx, g, pt, degeneracy_tol=degeneracy_tol)
    image = jacobi_action(g, pt, degeneracy_tol=degeneracy_tol)
    return complex(f(image)) / factor


def slashed(ctx: SlashContext, f: JacobiFunction, g: JacobiElement) -> JacobiFunction:
    """f|[g] as a function, for composing slashes."""

    def h(pt: JacobiPoint) -> complex:
        return slash(ctx, f, g, pt)

    return h
