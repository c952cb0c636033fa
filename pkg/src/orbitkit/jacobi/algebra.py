"""The Lie algebra 𝔤^J, its dual and the coadjoint action.

Elements (X, (P, Q, R)) with X = [[a, b], [c, −^ta]] are realized as

    [[a, 0, b, ^tQ],
     [P, 0, Q, R  ],
     [c, 0, −^ta, −^tP],
     [0, 0, 0, 0  ]]

and dual elements as

    [[x,  p, y,    0],
     [0,  0, 0,    0],
     [z,  q, −^tx, 0],
     [^tq, r, −^tp, 0]]

in the (n, m, n, m) block convention. The pairing is tr(F·L).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import sympy

from orbitkit.core.errors import DomainError
from orbitkit.jacobi.group import JacobiElement, jacobi_embed
from orbitkit.linalg.kinds import (
    Matrix,
    Scalar,
    assemble,
    inverse,
    is_exact,
    is_symmetric,
    matrices_equal,
    rank,
    shape,
    sub_block,
    sym,
    to_float,
    trace,
    unit,
    zeros,
)
from orbitkit.symplectic import is_in_sp, sp_basis

SYMMETRY_TOL = 1e-12


def _tol(A: Matrix, tol: float) -> float | None:
    return None if is_exact(A) else tol


@dataclass(frozen=True)
class JacobiLieElement:
    X: Matrix
    P: Matrix
    Q: Matrix
    R: Matrix

    @classmethod
    def of(
        cls, X: Matrix, P: Matrix, Q: Matrix, R: Matrix, tol: float = SYMMETRY_TOL
    ) -> "JacobiLieElement":
        rows, _ = shape(X)
        m, n = shape(P)
        if rows != 2 * n or shape(Q) != (m, n) or shape(R) != (m, m):
            raise DomainError(
                {
                    "reason": "dimension mismatch",
                    "X": shape(X),
                    "P": shape(P),
                    "Q": shape(Q),
                    "R": shape(R),
                }
            )
        if not is_in_sp(X, _tol(X, tol)):
            raise DomainError("X is not in sp(n,R)")
        if not is_symmetric(R, _tol(R, tol)):
            raise DomainError("R is not symmetric")
        return cls(X, P, Q, R)

    @classmethod
    def from_matrix(cls, L: Matrix, n: int, m: int) -> "JacobiLieElement":
        sizes = (n, m, n, m)

        def blk(i: int, j: int) -> Matrix:
            return sub_block(L, sizes, i, j)

        blocks = {(0, 0): blk(0, 0), (0, 1): blk(0, 2), (1, 0): blk(2, 0), (1, 1): blk(2, 2)}
        X = assemble((n, n), blocks, is_exact(L))
        return cls(X, blk(1, 0), blk(1, 2), blk(1, 3))

    @property
    def dims(self) -> tuple[int, int]:
        m, n = shape(self.P)
        return n, m

    def matrix(self) -> Matrix:
        n, m = self.dims
        a, b = self.X[:n, :n], self.X[:n, n:]
        c, d = self.X[n:, :n], self.X[n:, n:]
        return assemble(
            (n, m, n, m),
            {
                (0, 0): a,
                (0, 2): b,
                (0, 3): self.Q.T,
                (1, 0): self.P,
                (1, 2): self.Q,
                (1, 3): self.R,
                (2, 0): c,
                (2, 2): d,
                (2, 3): -self.P.T,
            },
            is_exact(self.X),
        )


@dataclass(frozen=True)
class JacobiDual:
    x: Matrix
    p: Matrix
    y: Matrix
    z: Matrix
    q: Matrix
    r: Matrix

    @classmethod
    def of(
        cls,
        x: Matrix,
        p: Matrix,
        y: Matrix,
        z: Matrix,
        q: Matrix,
        r: Matrix,
        tol: float = SYMMETRY_TOL,
    ) -> "JacobiDual":
        n, m = shape(p)
        if shape(x) != (n, n) or shape(y) != (n, n) or shape(z) != (n, n):
            raise DomainError(
                {"reason": "dimension mismatch", "x": shape(x), "y": shape(y), "z": shape(z)}
            )
        if shape(q) != (n, m) or shape(r) != (m, m):
            raise DomainError({"reason": "dimension mismatch", "q": shape(q), "r": shape(r)})
        for name, block_ in (("y", y), ("z", z), ("r", r)):
            if not is_symmetric(block_, _tol(block_, tol)):
                raise DomainError(f"{name} is not symmetric")
        return cls(x, p, y, z, q, r)

    @classmethod
    def zero(cls, n: int, m: int, exact_kind: bool = True) -> "JacobiDual":
        return cls(
            zeros(n, n, exact_kind),
            zeros(n, m, exact_kind),
            zeros(n, n, exact_kind),
            zeros(n, n, exact_kind),
            zeros(n, m, exact_kind),
            zeros(m, m, exact_kind),
        )

    @property
    def dims(self) -> tuple[int, int]:
        return shape(self.p)

    @property
    def exact(self) -> bool:
        return all(is_exact(b) for b in (self.x, self.p, self.y, self.z, self.q, self.r))

    @property
    def sp_part(self) -> Matrix:
        """[[x, y], [z, −^tx]]."""
        n, _ = self.dims
        blocks = {(0, 0): self.x, (0, 1): self.y, (1, 0): self.z, (1, 1): -self.x.T}
        return assemble((n, n), blocks, self.exact)

    def matrix(self) -> Matrix:
        n, m = self.dims
        return assemble(
            (n, m, n, m),
            {
                (0, 0): self.x,
                (0, 1): self.p,
                (0, 2): self.y,
                (2, 0): self.z,
                (2, 1): self.q,
                (2, 2): -self.x.T,
                (3, 0): self.q.T,
                (3, 1): self.r,
                (3, 2): -self.p.T,
            },
            self.exact,
        )

    def as_float(self) -> "JacobiDual":
        return JacobiDual(*(to_float(b) for b in (self.x, self.p, self.y, self.z, self.q, self.r)))

    def equals(self, other: "JacobiDual", tol: float | None = None) -> bool:
        return self.dims == other.dims and all(
            matrices_equal(a, b, tol)
            for a, b in zip(
                (self.x, self.p, self.y, self.z, self.q, self.r),
                (other.x, other.p, other.y, other.z, other.q, other.r),
            )
        )


def project_jacobi_dual(Phi: Matrix, n: int, m: int) -> JacobiDual:
    """The unique dual element F with tr(F L) = tr(Φ L) for every L in 𝔤^J."""
    sizes = (n, m, n, m)

    def blk(i: int, j: int) -> Matrix:
        return sub_block(Phi, sizes, i, j)

    return JacobiDual(
        x=(blk(0, 0) - blk(2, 2).T) / 2,
        p=(blk(0, 1) - blk(3, 2).T) / 2,
        y=sym(blk(0, 2)),
        z=sym(blk(2, 0)),
        q=(blk(2, 1) + blk(3, 0).T) / 2,
        r=sym(blk(3, 1)),
    )


def _check(F: JacobiDual, L: JacobiLieElement) -> None:
    if F.dims != L.dims:
        raise DomainError({"reason": "dimension mismatch", "dual": F.dims, "element": L.dims})


def jacobi_pairing(F: JacobiDual, L: JacobiLieElement) -> Scalar:
    """2σ(xa) + σ(yc) + σ(zb) + 2σ(pP) + 2σ(qQ) + σ(rR), which equals tr(F·L)."""
    _check(F, L)
    n, _ = F.dims
    a, b, c = L.X[:n, :n], L.X[:n, n:], L.X[n:, :n]
    return (
        2 * trace(F.x @ a)
        + trace(F.y @ c)
        + trace(F.z @ b)
        + 2 * trace(F.p @ L.P)
        + 2 * trace(F.q @ L.Q)
        + trace(F.r @ L.R)
    )


def jacobi_pairing_matrix(F: JacobiDual, L: JacobiLieElement) -> Scalar:
    _check(F, L)
    return trace(F.matrix() @ L.matrix())


def jacobi_bracket(L1: JacobiLieElement, L2: JacobiLieElement) -> JacobiLieElement:
    """([X₁, X₂], (P̃, Q̃, R̃)) with (P̃, Q̃) = (P₁, Q₁)X₂ − (P₂, Q₂)X₁ and
    R̃ = P₁^tQ₂ − Q₁^tP₂ − P₂^tQ₁ + Q₂^tP₁."""
    n, _ = L1.dims
    pq1 = _row_join(L1.P, L1.Q) @ L2.X
    pq2 = _row_join(L2.P, L2.Q) @ L1.X
    pq = pq1 - pq2
    R = L1.P @ L2.Q.T - L1.Q @ L2.P.T - L2.P @ L1.Q.T + L2.Q @ L1.P.T
    return JacobiLieElement(L1.X @ L2.X - L2.X @ L1.X, pq[:, :n], pq[:, n:], R)


def _row_join(left: Matrix, right: Matrix) -> Matrix:
    if is_exact(left) and is_exact(right):
        return left.row_join(right)
    return np.hstack([to_float(left), to_float(right)])


def jacobi_lie_basis(n: int, m: int) -> list[JacobiLieElement]:
    """sp(n) basis, then the P units, the Q units and the symmetric R units."""
    zero_pq = zeros(m, n, True)
    zero_r = zeros(m, m, True)
    zero_x = zeros(2 * n, 2 * n, True)
    basis = [JacobiLieElement(X, zero_pq, zero_pq, zero_r) for X in sp_basis(n)]
    cells = [(p, q) for p in range(m) for q in range(n)]
    basis += [JacobiLieElement(zero_x, unit(m, n, p, q), zero_pq, zero_r) for p, q in cells]
    basis += [JacobiLieElement(zero_x, zero_pq, unit(m, n, p, q), zero_r) for p, q in cells]
    for a in range(m):
        for b in range(a, m):
            R = unit(m, m, a, b)
            if a != b:
                R = R + unit(m, m, b, a)
            basis.append(JacobiLieElement(zero_x, zero_pq, zero_pq, R))
    return basis


def jacobi_coadjoint(g: JacobiElement, F: JacobiDual) -> JacobiDual:
    """(g F g^{-1})_* with g realized through jacobi_embed."""
    if g.dims != F.dims:
        raise DomainError({"reason": "dimension mismatch", "element": g.dims, "dual": F.dims})
    exact_kind = g.exact and F.exact
    if not exact_kind:
        g = g.as_float()
        F = F.as_float()
    E = jacobi_embed(g).M
    n, m = g.dims
    return project_jacobi_dual(E @ F.matrix() @ inverse(E), n, m)


def coadjoint_tangent(F: JacobiDual, L: JacobiLieElement) -> JacobiDual:
    """d/dt Ad*(exp tL)F at t = 0, i.e. ([L, F])_*."""
    _check(F, L)
    n, m = F.dims
    Lm = L.matrix()
    Fm = F.matrix()
    if is_exact(Lm) != is_exact(Fm):
        Lm, Fm = to_float(Lm), to_float(Fm)
    return project_jacobi_dual(Lm @ Fm - Fm @ Lm, n, m)


def _flat(F: JacobiDual) -> list[Scalar]:
    return [v for b in (F.x, F.p, F.y, F.z, F.q, F.r) for v in (b if is_exact(b) else b.ravel())]


def orbit_dimension(F: JacobiDual, tol: float | None = None) -> int:
    """Rank of L ↦ ([L, F])_* over the basis of 𝔤^J."""
    n, m = F.dims
    rows = [_flat(coadjoint_tangent(F, L)) for L in jacobi_lie_basis(n, m)]
    if F.exact:
        return rank(sympy.Matrix(rows))
    return rank(np.array(rows, dtype=float), 1e-9 if tol is None else tol)
