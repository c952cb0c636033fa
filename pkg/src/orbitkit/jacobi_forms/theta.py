"""Theta series ϑ_{S,c}(Z, W) = Σ_λ e^{πi(σ(SλZ^tλ) + 2σ(^tcSλ^tW))} over λ ∈ ℤ^{(2k,n)}.

Lattice points are enumerated on the ellipsoid where a term can exceed ``term_tol``
(Fincke–Pohst on the Cholesky factor of Im Z ⊗ S), intersected with the box
‖λ‖∞ ≤ radius. Everything left out is covered by ``tail_bound``.
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
import scipy.linalg
import sympy

from orbitkit.core.errors import DomainError
from orbitkit.heisenberg.group import HeisElement
from orbitkit.jacobi.group import JacobiElement, JacobiPoint
from orbitkit.jacobi_forms.slash import JacobiFunction, SlashContext, slash
from orbitkit.linalg.kinds import exact, identity, is_zero, shape, unit, zeros
from orbitkit.symplectic import J, SymplecticElement

logger = logging.getLogger(__name__)

_EPSILONS = np.linspace(0.02, 0.98, 49)
GENERATORS = ("translation", "lambda", "mu", "inversion")
DEFAULT_RADIUS = 6
DEFAULT_TERM_TOL = 1e-15


@dataclass(frozen=True)
class ThetaSpec:
    """Lattice data: S even, symmetric, positive definite (2k × 2k); c integral (2k × m)."""

    S: sympy.Matrix
    c: sympy.Matrix
    radius: int

    @classmethod
    def of(cls, S: object, c: object, radius: int | None = None) -> "ThetaSpec":
        S, c = exact(S), exact(c)
        rows, cols = shape(S)
        if rows != cols:
            raise DomainError({"reason": "S must be square", "S": (rows, cols)})
        if shape(c)[0] != rows:
            raise DomainError({"reason": "c must have as many rows as S", "S": rows, "c": shape(c)})
        if any(not v.is_integer for v in S) or any(not v.is_integer for v in c):
            raise DomainError("S and c must be integral")
        if S != S.T:
            raise DomainError("S is not symmetric")
        if any(S[i, i] % 2 for i in range(rows)):
            raise DomainError("S must be even (even diagonal)")
        if np.linalg.eigvalsh(np.array(S.tolist(), dtype=float)).min() <= 0:
            raise DomainError("S is not positive definite")
        radius = DEFAULT_RADIUS if radius is None else int(radius)
        if radius < 1:
            raise DomainError({"reason": "radius must be positive", "radius": radius})
        return cls(S, c, radius)

    @property
    def rank(self) -> int:
        return self.S.rows

    @property
    def m(self) -> int:
        return self.c.cols

    @property
    def weight(self) -> int:
        return self.rank // 2

    @property
    def index(self) -> sympy.Matrix:
        """𝓜 = ½ ^tc S c."""
        return (self.c.T * self.S * self.c) / 2

    @property
    def unimodular(self) -> bool:
        return self.S.det() == 1

    def arrays(self) -> tuple[np.ndarray, np.ndarray]:
        return (
            np.array(self.S.tolist(), dtype=np.int64),
            np.array(self.c.tolist(), dtype=np.int64),
        )


@dataclass(frozen=True)
class ThetaValue:
    value: complex
    tail_bound: float
    points: int
    radius: int


def _ellipsoid_points(
    G: np.ndarray, center: np.ndarray, bound: float
) -> tuple[np.ndarray, np.ndarray]:
    """Integer x with (x − center)^t G (x − center) ≤ bound, plus the Cholesky diagonal q_ii."""
    R = scipy.linalg.cholesky(G)
    d = len(center)
    scale = np.diag(R)
    q_diag = scale**2
    q = R / scale[:, None]
    bound = bound + 1e-9 * max(1.0, bound)
    x = np.zeros(d, dtype=np.int64)
    found: list[np.ndarray] = []

    def descend(i: int, remaining: float) -> None:
        s = center[i] - q[i, i + 1 :] @ (x[i + 1 :] - center[i + 1 :])
        half = math.sqrt(max(remaining, 0.0) / q_diag[i])
        for v in range(math.ceil(s - half), math.floor(s + half) + 1):
            used = q_diag[i] * (v - s) ** 2
            if used > remaining:
                continue
            x[i] = v
            if i == 0:
                found.append(x.copy())
            else:
                descend(i - 1, remaining - used)
        x[i] = 0

    descend(d - 1, bound)
    return np.array(found, dtype=np.int64).reshape(-1, d), q_diag


def _ellipsoid_tail(q_diag: np.ndarray, bound: float) -> float:
    """Σ_{Q(x−c) > bound} e^{−πQ(x−c)} ≤ min_ε e^{−π(1−ε)bound} Π_i (1 + 1/√(ε q_ii))."""
    logs = [
        -np.pi * (1 - eps) * bound + float(np.sum(np.log1p(1 / np.sqrt(eps * q_diag))))
        for eps in _EPSILONS
    ]
    return float(np.exp(min(logs)))


@dataclass(frozen=True)
class _Lattice:
    points: np.ndarray
    tail_bound: float


@lru_cache(maxsize=256)
def _lattice(
    S_key: bytes,
    c_key: bytes,
    N: int,
    m: int,
    Y_key: bytes,
    V_key: bytes,
    n: int,
    radius: int,
    term_tol: float,
) -> _Lattice:
    S = np.frombuffer(S_key, dtype=np.int64).reshape(N, N).astype(float)
    c = np.frombuffer(c_key, dtype=np.int64).reshape(N, m).astype(float)
    Y = np.frombuffer(Y_key, dtype=float).reshape(n, n)
    V = np.frombuffer(V_key, dtype=float).reshape(m, n)
    # |term(λ)| = e^{πq*} e^{−πQ(λ − λ*)} with Q(u) = σ(S u Y ^tu) = vec(u)^t (Y ⊗ S) vec(u).
    lam_star = -c @ V @ np.linalg.inv(Y)
    G = np.kron(Y, S)
    center = lam_star.T.reshape(-1)
    q_star = float(center @ G @ center)
    threshold = -math.log(term_tol) + np.pi * q_star
    bound = threshold / np.pi
    points, q_diag = _ellipsoid_points(G, center, bound)
    tail = math.exp(np.pi * q_star) * _ellipsoid_tail(q_diag, bound)
    outside = np.abs(points).max(axis=1, initial=0) > radius
    if outside.any():
        offsets = points[outside] - center
        magnitudes = np.exp(np.pi * q_star - np.pi * np.einsum("pi,ij,pj->p", offsets, G, offsets))
        tail += float(np.sum(magnitudes))
        points = points[~outside]
    order = np.lexsort(points.T[::-1])
    logger.debug("theta lattice: %d points, tail bound %.3e", len(points), tail)
    return _Lattice(points[order], tail)


def theta_eval(
    spec: ThetaSpec,
    pt: JacobiPoint,
    *,
    radius: int | None = None,
    term_tol: float = DEFAULT_TERM_TOL,
    tolerance: float = 1e-10,
) -> ThetaValue:
    """ϑ_{S,c}(Z, W) summed in lexicographic order of λ.

    The returned tail bound is rigorous for every term left out of the sum. A bound
    above ``tolerance`` is logged as a warning.
    """
    n, m = pt.dims
    if m != spec.m:
        raise DomainError({"reason": "dimension mismatch", "c columns": spec.m, "W rows": m})
    radius = spec.radius if radius is None else radius
    S, c = spec.arrays()
    Z, W = pt.Z.Z, pt.W
    Y = np.ascontiguousarray(Z.imag)
    V = np.ascontiguousarray(W.imag)
    N = spec.rank
    lattice = _lattice(
        S.tobytes(), c.tobytes(), N, m, Y.tobytes(), V.tobytes(), n, radius, float(term_tol)
    )
    if lattice.tail_bound > tolerance:
        logger.warning(
            "theta tail bound %.3e exceeds tolerance %.1e (radius %d)",
            lattice.tail_bound,
            tolerance,
            radius,
        )
    L = lattice.points.reshape(-1, n, N).transpose(0, 2, 1).astype(float)
    quadratic = np.einsum("ij,nja,ab,nib->n", S, L, Z, L)
    linear = np.einsum("ip,ij,nja,pa->n", c, S, L, W)
    terms = np.exp(1j * np.pi * (quadratic + 2 * linear))
    return ThetaValue(complex(np.sum(terms)), lattice.tail_bound, len(L), radius)


def theta_function(spec: ThetaSpec, **options: object) -> JacobiFunction:
    def f(pt: JacobiPoint) -> complex:
        return theta_eval(spec, pt, **options).value

    return f


def invariance_generator(name: str, n: int, m: int) -> JacobiElement:
    """Standard generators of Γ^J: Z ↦ Z + E, the unit λ- and µ-shifts and Z ↦ −Z⁻¹."""
    E = identity(n, True)
    O = zeros(n, n, True)
    heis = HeisElement.identity(n, m)
    if name == "translation":
        translation = sympy.Matrix.vstack(E.row_join(E), O.row_join(E))
        return JacobiElement(SymplecticElement(translation), heis)
    if name == "inversion":
        return JacobiElement(SymplecticElement(J(n, True)), heis)
    if name in ("lambda", "mu"):
        shift = unit(m, n, 0, 0)
        none = zeros(m, n, True)
        lam, mu = (shift, none) if name == "lambda" else (none, shift)
        shifted = HeisElement(lam, mu, zeros(m, m, True))
        return JacobiElement(SymplecticElement(identity(2 * n, True)), shifted)
    raise DomainError({"reason": "unknown generator", "generator": name, "known": list(GENERATORS)})


def default_grid(n: int, m: int) -> list[JacobiPoint]:
    """Five fixed points of H_{n,m}; Z = τE_n and W = w·(1)."""
    taus = (1j, 0.3 + 1.1j, -0.4 + 0.9j, 0.1 + 1.5j, 0.5 + 0.8j)
    ws = (0.0, 0.2 + 0.1j, -0.3 + 0.05j, 0.15 - 0.1j, 0.4 + 0.2j)
    return [
        JacobiPoint.of(tau * np.eye(n), w * np.ones((m, n), dtype=np.complex128))
        for tau, w in zip(taus, ws)
    ]


@dataclass(frozen=True)
class InvarianceReport:
    generator: str
    residual: float
    tolerance: float
    tail_bound: float
    residuals: list[float] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.residual <= self.tolerance


def theta_slash_invariance(
    spec: ThetaSpec,
    generator: JacobiElement | str,
    points: list[JacobiPoint] | None = None,
    *,
    tolerance: float = 1e-8,
    radius: int | None = None,
    term_tol: float = DEFAULT_TERM_TOL,
    max_workers: int = 4,
) -> InvarianceReport:
    """max |(ϑ|_{k,𝓜}[γ])(Z, W) − ϑ(Z, W)| over a grid, k = rank(S)/2 and 𝓜 = ½ ^tcSc."""
    if spec.rank % 2:
        raise DomainError({"reason": "weight rank(S)/2 must be an integer", "rank": spec.rank})
    points = points or default_grid(1, spec.m)
    n, m = points[0].dims
    label = generator if isinstance(generator, str) else "custom"
    g = invariance_generator(generator, n, m) if isinstance(generator, str) else generator
    _, _, C, _ = g.M.blocks
    if not is_zero(C) and not spec.unimodular:
        raise DomainError(
            {"reason": "generators with C ≠ 0 need det S = 1", "det S": int(spec.S.det())}
        )
    ctx = SlashContext.of(n, m, spec.weight, spec.index)
    theta = theta_function(spec, radius=radius, term_tol=term_tol)

    def residual(pt: JacobiPoint) -> tuple[float, float]:
        before = theta_eval(spec, pt, radius=radius, term_tol=term_tol)
        after = slash(ctx, theta, g, pt)
        return abs(after - before.value), before.tail_bound

    with ThreadPoolExecutor(max_workers=max_workers) as pool:
        results = list(pool.map(residual, points))
    residuals = [r for r, _ in results]
    tail = max(t for _, t in results)
    report = InvarianceReport(label, max(residuals), max(tolerance, 10 * tail), tail, residuals)
    logger.info("theta invariance under %s: residual %.3e", label, report.residual)
    return report


def e8_gram() -> sympy.Matrix:
    """Cartan matrix of E₈: even, unimodular and positive definite."""
    G = 2 * sympy.eye(8)
    for a, b in ((1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)):
        G[a - 1, b - 1] = G[b - 1, a - 1] = -1
    return G


def lattice_count(spec: ThetaSpec, T: object, R: object) -> int:
    """#{x ∈ ℤ^{2k} : ½ ^txSx = T, ^tcSx = R}, for a single column c."""
    if spec.m != 1:
        raise DomainError({"reason": "lattice_count needs m = 1", "m": spec.m})
    twice_T = 2 * sympy.nsimplify(T)
    R = sympy.nsimplify(R)
    if not twice_T.is_integer or not R.is_integer or twice_T < 0:
        return 0
    S, c = spec.arrays()
    points, _ = _ellipsoid_points(S.astype(float), np.zeros(spec.rank), float(twice_T))
    norms = np.einsum("pi,ij,pj->p", points, S, points)
    linear = points @ S @ c[:, 0]
    return int(np.count_nonzero((norms == int(twice_T)) & (linear == int(R))))
