"""The Jacobi group G^J = Sp(n,R) ⋉ H^{(n,m)}: group law, embedding into Sp(n+m,R),
action on H_n × C^{(m,n)}, Iwasawa decompositions and the differential of the action.

Block convention for the embedding: (n, m, n, m).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum

import numpy as np

from orbitkit.core.errors import DomainError
from orbitkit.heisenberg.group import HeisElement, heis_embed, heis_inv, heis_mul
from orbitkit.linalg.kinds import (
    Matrix,
    assemble,
    identity,
    inverse,
    is_exact,
    is_symmetric,
    matrices_equal,
    shape,
    to_float,
)
from orbitkit.symplectic import (
    IwasawaFactors,
    SiegelPoint,
    SymplecticElement,
    iwasawa_decompose,
    moebius_action,
    n_factor,
    t_factor,
)

logger = logging.getLogger(__name__)

# embed(g₁g₂) = embed(g₁)·embed(g₂); re-derived by detect_embedding_orientation.
EMBEDDING_ORIENTATION = "forward"


@dataclass(frozen=True)
class JacobiElement:
    M: SymplecticElement
    heis: HeisElement

    @classmethod
    def of(
        cls, M: Matrix, lam: Matrix, mu: Matrix, kappa: Matrix, tol: float = 1e-10
    ) -> "JacobiElement":
        element = SymplecticElement.of(M, tol)
        heis = HeisElement.of(lam, mu, kappa)
        if heis.dims[0] != element.n:
            raise DomainError(
                {"reason": "dimension mismatch", "n": element.n, "lambda": list(shape(lam))}
            )
        return cls(element, heis)

    @classmethod
    def identity(cls, n: int, m: int, exact_kind: bool = True) -> "JacobiElement":
        return cls(
            SymplecticElement(identity(2 * n, exact_kind)), HeisElement.identity(n, m, exact_kind)
        )

    @property
    def dims(self) -> tuple[int, int]:
        return self.M.n, self.heis.dims[1]

    @property
    def exact(self) -> bool:
        return is_exact(self.M.M) and self.heis.exact

    @property
    def xi(self) -> Matrix:
        """(λ, µ) as one m × 2n matrix."""
        return _hstack(self.heis.lam, self.heis.mu)

    def as_float(self) -> "JacobiElement":
        if not is_exact(self.M.M) and not self.heis.exact:
            return self
        return JacobiElement(
            SymplecticElement(to_float(self.M.M)),
            HeisElement(to_float(self.heis.lam), to_float(self.heis.mu), to_float(self.heis.kappa)),
        )

    def equals(self, other: "JacobiElement", tol: float | None = None) -> bool:
        return (
            self.dims == other.dims
            and matrices_equal(self.M.M, other.M.M, tol)
            and self.heis.equals(other.heis, tol)
        )


@dataclass(frozen=True)
class JacobiPoint:
    """(Z, W) in H_n × C^{(m,n)}."""

    Z: SiegelPoint
    W: np.ndarray

    @classmethod
    def of(cls, Z: Matrix, W: Matrix, tol: float = 1e-10) -> "JacobiPoint":
        point = SiegelPoint.of(Z, tol)
        W = np.asarray(to_float(W), dtype=np.complex128)
        if W.ndim != 2 or W.shape[1] != point.n:
            raise DomainError({"reason": "dimension mismatch", "n": point.n, "W": list(W.shape)})
        return cls(point, W)

    @classmethod
    def base(cls, n: int, m: int) -> "JacobiPoint":
        """(iE_n, 0)."""
        return cls(SiegelPoint(1j * np.eye(n)), np.zeros((m, n), dtype=np.complex128))

    @property
    def dims(self) -> tuple[int, int]:
        return self.Z.n, self.W.shape[0]


def _hstack(left: Matrix, right: Matrix) -> Matrix:
    if is_exact(left) and is_exact(right):
        return left.row_join(right)
    return np.hstack([to_float(left), to_float(right)])


def _split(xi: Matrix, n: int) -> tuple[Matrix, Matrix]:
    return xi[:, :n], xi[:, n:]


def _align(x: JacobiElement, y: JacobiElement) -> tuple[JacobiElement, JacobiElement]:
    if x.dims != y.dims:
        raise DomainError({"reason": "dimension mismatch", "left": x.dims, "right": y.dims})
    if x.exact and y.exact:
        return x, y
    return x.as_float(), y.as_float()


def jacobi_mul(x: JacobiElement, y: JacobiElement) -> JacobiElement:
    """(M,(λ,µ,κ))·(M',(λ',µ',κ')) = (MM', (λ̃+λ', µ̃+µ', κ+κ'+λ̃^tµ'−µ̃^tλ')).

    Here (λ̃,µ̃) = (λ,µ)M'.
    """
    x, y = _align(x, y)
    lam_t, mu_t = _split(x.xi @ y.M.M, x.M.n)
    heis = heis_mul(HeisElement(lam_t, mu_t, x.heis.kappa), y.heis)
    return JacobiElement(SymplecticElement(x.M.M @ y.M.M), heis)


def jacobi_inv(x: JacobiElement) -> JacobiElement:
    M_inv = inverse(x.M.M)
    lam_t, mu_t = _split(x.xi @ M_inv, x.M.n)
    return JacobiElement(SymplecticElement(M_inv), heis_inv(HeisElement(lam_t, mu_t, x.heis.kappa)))


def to_bracket_coords(x: JacobiElement) -> tuple[SymplecticElement, Matrix, Matrix, Matrix]:
    """[M, ξ, κ] with ξ = (λ, µ)M^{-1}, returned as (M, λ_ξ, µ_ξ, κ)."""
    lam_b, mu_b = _split(x.xi @ inverse(x.M.M), x.M.n)
    return x.M, lam_b, mu_b, x.heis.kappa


def from_bracket_coords(
    M: SymplecticElement, lam: Matrix, mu: Matrix, kappa: Matrix
) -> JacobiElement:
    lam_o, mu_o = _split(_hstack(lam, mu) @ M.M, M.n)
    return JacobiElement(M, HeisElement(lam_o, mu_o, kappa))


def symplectic_part(M: SymplecticElement, m: int) -> Matrix:
    """ι(M): A, B, C, D in the (0, 2) blocks and E_m on the Heisenberg diagonal."""
    n = M.n
    ex = is_exact(M.M)
    A, B, C, D = M.blocks
    return assemble(
        (n, m, n, m),
        {
            (0, 0): A,
            (0, 2): B,
            (2, 0): C,
            (2, 2): D,
            (1, 1): identity(m, ex),
            (3, 3): identity(m, ex),
        },
        ex,
    )


def jacobi_embed(x: JacobiElement) -> SymplecticElement:
    """ι(M)·heis_embed(λ, µ, κ), which is

        [[A, 0, B, A^tµ − B^tλ],
         [λ, E, µ, κ          ],
         [C, 0, D, C^tµ − D^tλ],
         [0, 0, 0, E          ]]
    """
    _, m = x.dims
    if not x.exact:
        x = x.as_float()
    return SymplecticElement(symplectic_part(x.M, m) @ heis_embed(x.heis).M)


def detect_embedding_orientation(pairs: list[tuple[JacobiElement, JacobiElement]]) -> str:
    """'forward' when embed(g₁g₂) = embed(g₁)embed(g₂) on every pair, 'reverse' for the
    opposite order. Pairs should be exact; mixed or failing samples raise."""
    forward = reverse = True
    for g1, g2 in pairs:
        image = jacobi_embed(jacobi_mul(g1, g2)).M
        left, right = jacobi_embed(g1).M, jacobi_embed(g2).M
        tol = None if g1.exact and g2.exact else 1e-9
        forward = forward and matrices_equal(image, left @ right, tol)
        reverse = reverse and matrices_equal(image, right @ left, tol)
    if forward and not reverse:
        return "forward"
    if reverse and not forward:
        return "reverse"
    raise DomainError(
        {"reason": "no consistent embedding orientation", "forward": forward, "reverse": reverse}
    )


def _automorphy_denominator(
    M: SymplecticElement, Z: np.ndarray, degeneracy_tol: float
) -> np.ndarray:
    _, _, C, D = (to_float(b) for b in M.blocks)
    denominator = C @ Z + D
    determinant = abs(np.linalg.det(denominator))
    if determinant < degeneracy_tol:
        raise DomainError({"reason": "numerical degeneracy", "det(CZ+D)": determinant})
    return denominator


def jacobi_action(
    g: JacobiElement, pt: JacobiPoint, *, degeneracy_tol: float = 1e-12, tol: float = 1e-9
) -> JacobiPoint:
    """(M<Z>, (W + λZ + µ)(CZ + D)^{-1})."""
    if g.dims != pt.dims:
        raise DomainError({"reason": "dimension mismatch", "element": g.dims, "point": pt.dims})
    x = g.as_float()
    denominator = _automorphy_denominator(x.M, pt.Z.Z, degeneracy_tol)
    Z = moebius_action(x.M, pt.Z, degeneracy_tol=degeneracy_tol, tol=tol)
    W = (pt.W + x.heis.lam @ pt.Z.Z + x.heis.mu) @ np.linalg.inv(denominator)
    return JacobiPoint(Z, W)


def q_form(xi: tuple[Matrix, Matrix], eta: tuple[Matrix, Matrix]) -> Matrix:
    """Q((λ,µ),(λ',µ')) = λ^tµ' − µ^tλ'; invariant under (ξ,η) ↦ (ξM, ηM) for M in Sp(n,R)."""
    lam, mu = xi
    lam2, mu2 = eta
    if shape(lam) != shape(lam2):
        raise DomainError(
            {"reason": "dimension mismatch", "left": shape(lam), "right": shape(lam2)}
        )
    return lam @ mu2.T - mu @ lam2.T


class IwasawaMode(str, Enum):
    """Ñ^J A^J K keeps the central part in the nilpotent factor; N^J A^J K^J moves it
    into the compact factor."""

    NTILDE_A_K = "NtildeAK"
    N_A_KJ = "NAKJ"


@dataclass(frozen=True)
class JacobiIwasawa:
    mode: IwasawaMode
    sp: IwasawaFactors
    lam_star: np.ndarray
    mu_star: np.ndarray
    kappa_star: np.ndarray
    nil: JacobiElement
    diag: JacobiElement
    compact: JacobiElement

    def product(self) -> JacobiElement:
        return jacobi_mul(jacobi_mul(self.nil, self.diag), self.compact)

    def validity(self, tol: float) -> dict[str, bool]:
        checks = dict(self.sp.validity(tol))
        checks["kappa_star_symmetric"] = is_symmetric(self.kappa_star, tol)
        checks["nil_lambda_zero"] = matrices_equal(
            self.nil.heis.lam, np.zeros_like(self.lam_star), tol
        )
        checks["diag_mu_zero"] = matrices_equal(self.diag.heis.mu, np.zeros_like(self.mu_star), tol)
        compact_heis = self.compact.heis
        checks["compact_xi_zero"] = matrices_equal(
            to_float(self.compact.xi), np.zeros_like(to_float(self.compact.xi)), tol
        )
        if self.mode is IwasawaMode.NTILDE_A_K:
            checks["compact_kappa_zero"] = matrices_equal(
                compact_heis.kappa, np.zeros_like(self.kappa_star), tol
            )
        else:
            checks["nil_kappa_zero"] = matrices_equal(
                self.nil.heis.kappa, np.zeros_like(self.kappa_star), tol
            )
        return checks


def jacobi_iwasawa(
    g: JacobiElement, mode: IwasawaMode = IwasawaMode.NTILDE_A_K, tol: float = 1e-9
) -> JacobiIwasawa:
    """Factor g through the Iwasawa factors n(A, B)·t(H)·k of its Sp part.

    With ξ = (λ_ξ, µ_ξ) = (λ, µ)M^{-1}, the parameters are
        λ* = λ_ξ A,  µ* = µ_ξ + λ_ξ B^tA,  κ* = κ + µ*^tλ_ξ,
    and κ* is symmetric. In bracket coordinates the factors are
        [n, (0, µ*), κ*]·[t(H), (λ*, 0), 0]·[k, 0, 0]        (Ñ^J A^J K)
        [n, (0, µ*), 0]·[t(H), (λ*, 0), 0]·[k, (0, 0), κ*]   (N^J A^J K^J)
    """
    x = g.as_float()
    n, m = x.dims
    sp = iwasawa_decompose(x.M, tol)
    _, lam_b, mu_b, kappa = to_bracket_coords(x)
    lam_star = lam_b @ sp.A
    mu_star = mu_b + lam_b @ sp.B @ sp.A.T
    kappa_star = kappa + mu_star @ lam_b.T
    kappa_star = (kappa_star + kappa_star.T) / 2

    zero_xi = np.zeros((m, n))
    zero_kappa = np.zeros((m, m))
    N = SymplecticElement(to_float(n_factor(sp.A, sp.B)))
    T = SymplecticElement(to_float(t_factor(sp.H)))
    K = SymplecticElement(sp.k)
    diag = from_bracket_coords(T, lam_star, zero_xi, zero_kappa)
    if mode is IwasawaMode.NTILDE_A_K:
        nil = from_bracket_coords(N, zero_xi, mu_star, kappa_star)
        compact = JacobiElement(K, HeisElement(zero_xi, zero_xi, zero_kappa))
    else:
        nil = from_bracket_coords(N, zero_xi, mu_star, zero_kappa)
        compact = from_bracket_coords(K, zero_xi, zero_xi, kappa_star)
    logger.debug("jacobi_iwasawa: mode %s, n=%d, m=%d", mode.value, n, m)
    return JacobiIwasawa(mode, sp, lam_star, mu_star, kappa_star, nil, diag, compact)


def jacobi_differential(
    g: JacobiElement, v: Matrix, w: Matrix
) -> tuple[np.ndarray, np.ndarray]:
    """dT_g at (iE_n, 0) applied to (v, w):

        v(g) = ^t(iC + D)^{-1} v (iC + D)^{-1}
        w(g) = w (iC + D)^{-1} + λ_ξ ^t(iC + D)^{-1} v (iC + D)^{-1}

    where λ_ξ is the first component of (λ, µ)M^{-1}.
    """
    x = g.as_float()
    n, m = x.dims
    v = np.asarray(to_float(v), dtype=np.complex128)
    w = np.asarray(to_float(w), dtype=np.complex128)
    if v.shape != (n, n) or w.shape != (m, n):
        raise DomainError({"reason": "dimension mismatch", "v": list(v.shape), "w": list(w.shape)})
    _, _, C, D = x.M.blocks
    factor = np.linalg.inv(1j * C + D)
    _, lam_b, _, _ = to_bracket_coords(x)
    v_image = factor.T @ v @ factor
    return v_image, w @ factor + lam_b @ v_image


def differential_fd(
    g: JacobiElement, v: Matrix, w: Matrix, *, step: float = 1e-5
) -> tuple[np.ndarray, np.ndarray]:
    """Central finite difference of the action at (iE_n, 0) in the direction (v, w)."""
    n, m = g.dims
    v = np.asarray(to_float(v), dtype=np.complex128)
    w = np.asarray(to_float(w), dtype=np.complex128)
    base = JacobiPoint.base(n, m)

    def act(sign: float) -> JacobiPoint:
        point = JacobiPoint(SiegelPoint(base.Z.Z + sign * step * v), base.W + sign * step * w)
        return jacobi_action(g, point)

    plus, minus = act(1.0), act(-1.0)
    return (plus.Z.Z - minus.Z.Z) / (2 * step), (plus.W - minus.W) / (2 * step)
