"""Coadjoint orbits of G^J.

For n = m = 1 the dual is written xX + yY + zZ + pP + qQ + rR, whose matrix is

    [[x, p, y+z, 0],
     [0, 0, 0,   0],
     [y−z, q, −x, 0],
     [q, r, −p,  0]]

and each named orbit is cut out by polynomial equations in (x, y, z, p, q, r).
For general (n, m) the minimal orbits Ω_δ are given by δ = r and
X J_n = (p; q) δ⁻¹ ^t(p; q) with X = [[x, y], [z, −^tx]].
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum

import numpy as np
import sympy

from orbitkit.core.errors import DomainError
from orbitkit.jacobi.algebra import JacobiDual, jacobi_coadjoint, orbit_dimension
from orbitkit.jacobi.group import JacobiElement
from orbitkit.linalg.kinds import (
    Matrix,
    Scalar,
    det,
    inverse,
    is_exact,
    is_symmetric,
    operator_norm,
    scalar_to_float,
    shape,
    to_carrier,
)
from orbitkit.sampling import random_heis, random_symplectic
from orbitkit.symplectic import J

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OrbitCoordinates:
    x: Scalar
    y: Scalar
    z: Scalar
    p: Scalar
    q: Scalar
    r: Scalar

    def as_tuple(self) -> tuple[Scalar, ...]:
        return self.x, self.y, self.z, self.p, self.q, self.r

    def as_float(self) -> tuple[float, ...]:
        return tuple(float(scalar_to_float(v)) for v in self.as_tuple())


def orbit_coordinates(F: JacobiDual) -> OrbitCoordinates:
    if F.dims != (1, 1):
        raise DomainError({"reason": "orbit coordinates need n = m = 1", "dims": F.dims})
    y_block, z_block = F.y[0, 0], F.z[0, 0]
    return OrbitCoordinates(
        x=F.x[0, 0],
        y=(y_block + z_block) / 2,
        z=(y_block - z_block) / 2,
        p=F.p[0, 0],
        q=F.q[0, 0],
        r=F.r[0, 0],
    )


def from_orbit_coordinates(c: OrbitCoordinates, exact_kind: bool | None = None) -> JacobiDual:
    if exact_kind is None:
        exact_kind = all(isinstance(v, (int, sympy.Rational)) for v in c.as_tuple())

    def one(value: Scalar) -> Matrix:
        return to_carrier([[value]], exact_kind)

    return JacobiDual(
        x=one(c.x),
        p=one(c.p),
        y=one(c.y + c.z),
        z=one(c.y - c.z),
        q=one(c.q),
        r=one(c.r),
    )


class OrbitFamily(str, Enum):
    X = "X"
    Y = "Y"
    Z = "Z"
    S = "S"
    T = "T"
    P = "P"
    Q = "Q"
    R = "R"
    MR_ALPHA_X = "mR+aX"
    MR_ALPHA_Y = "mR+aY"
    MR_KZ = "mR+kZ"

    @classmethod
    def parse(cls, tag: str) -> "OrbitFamily":
        aliases = {"hR": cls.R, "mR+alphaX": cls.MR_ALPHA_X, "mR+alphaY": cls.MR_ALPHA_Y}
        try:
            return aliases.get(tag) or cls(tag)
        except ValueError as exc:
            raise DomainError({"reason": "unknown orbit family", "family": tag}) from exc


@dataclass(frozen=True)
class FamilyParams:
    """h for hR; m with alpha or k for the mR families; sign picks the mR+kZ sheet."""

    h: Scalar = 1
    m: Scalar = 1
    alpha: Scalar = 0
    k: Scalar = 1
    sign: int = 1

    def check(self, family: OrbitFamily) -> None:
        if family is OrbitFamily.R and self.h == 0:
            raise DomainError("hR needs h != 0")
        mr_families = (OrbitFamily.MR_ALPHA_X, OrbitFamily.MR_ALPHA_Y, OrbitFamily.MR_KZ)
        if family in mr_families and self.m == 0:
            raise DomainError(f"{family.value} needs m != 0")
        if family is OrbitFamily.MR_KZ and not self.k > 0:
            raise DomainError("mR+kZ needs k > 0")
        if self.sign not in (1, -1):
            raise DomainError("sign must be +1 or -1")


def family_seed(family: OrbitFamily, params: FamilyParams = FamilyParams()) -> OrbitCoordinates:
    """The representative functional of the family in (x, y, z, p, q, r)."""
    params.check(family)
    half = sympy.Rational(1, 2)
    seeds = {
        OrbitFamily.X: (1, 0, 0, 0, 0, 0),
        OrbitFamily.Y: (0, 1, 0, 0, 0, 0),
        OrbitFamily.Z: (0, 0, 1, 0, 0, 0),
        OrbitFamily.S: (0, half, half, 0, 0, 0),
        OrbitFamily.T: (0, half, -half, 0, 0, 0),
        OrbitFamily.P: (0, 0, 0, 1, 0, 0),
        OrbitFamily.Q: (0, 0, 0, 0, 1, 0),
        OrbitFamily.R: (0, 0, 0, 0, 0, params.h),
        OrbitFamily.MR_ALPHA_X: (params.alpha, 0, 0, 0, 0, params.m),
        OrbitFamily.MR_ALPHA_Y: (0, params.alpha, 0, 0, 0, params.m),
        OrbitFamily.MR_KZ: (0, 0, params.sign * params.k, 0, 0, params.m),
    }
    return OrbitCoordinates(*seeds[family])


@dataclass(frozen=True)
class OrbitMembership:
    family: OrbitFamily
    residual: float
    conditions: dict[str, bool] = field(default_factory=dict)
    boundary_degenerate: bool = False
    member: bool = False


def _mixed_form(c: OrbitCoordinates) -> Scalar:
    """2pqx + (q² − p²)y + (p² + q²)z."""
    return 2 * c.p * c.q * c.x + (c.q**2 - c.p**2) * c.y + (c.p**2 + c.q**2) * c.z


def reduced_z(c: OrbitCoordinates, m: Scalar) -> Scalar:
    """z + (p² + q²)/(2m); its sign labels the sheets of the mR+kZ varieties."""
    return c.z + (c.p**2 + c.q**2) / (2 * m)


def _magnitude(values: list[Scalar]) -> float:
    return max(abs(complex(scalar_to_float(v))) for v in values)


def orbit_membership(
    F: JacobiDual | OrbitCoordinates,
    family: OrbitFamily | str,
    params: FamilyParams = FamilyParams(),
    tol: float = 1e-9,
) -> OrbitMembership:
    """Residual of the defining equations of ``family`` at F, plus the side conditions."""
    family = OrbitFamily.parse(family) if isinstance(family, str) else family
    params.check(family)
    c = F if isinstance(F, OrbitCoordinates) else orbit_coordinates(F)
    x, y, z, p, q, r = c.as_tuple()

    def small(value: Scalar) -> bool:
        return abs(complex(scalar_to_float(value))) <= tol

    conditions: dict[str, bool] = {}
    boundary = False
    if family in (OrbitFamily.X, OrbitFamily.Y):
        equations = [x**2 + y**2 - z**2 - 1, p, q, r]
    elif family is OrbitFamily.Z:
        equations = [x**2 + y**2 - z**2 + 1, p, q, r]
        conditions["z > 0"] = float(scalar_to_float(z)) > tol
        # the strict x² + y² > 0 fails on the axis of the sheet
        boundary = small(x**2 + y**2)
    elif family in (OrbitFamily.S, OrbitFamily.T):
        equations = [x**2 + y**2 - z**2, p, q, r]
        zf = float(scalar_to_float(z))
        conditions["z > 0" if family is OrbitFamily.S else "z < 0"] = (
            zf > tol if family is OrbitFamily.S else zf < -tol
        )
    elif family in (OrbitFamily.P, OrbitFamily.Q):
        equations = [_mixed_form(c), r]
        conditions["(p, q) != 0"] = not (small(p) and small(q))
    elif family is OrbitFamily.R:
        h = params.h
        equations = [x**2 + y**2 - z**2, x - p * q / h, y + z + p**2 / h, y - z - q**2 / h, r - h]
    else:
        mm = params.m
        if family is OrbitFamily.MR_KZ:
            quadric = x**2 + y**2 - (z**2 - params.k**2)
        else:
            quadric = x**2 + y**2 - (z**2 + params.alpha**2)
        equations = [quadric - _mixed_form(c) / mm, r - mm]
        if family is OrbitFamily.MR_KZ:
            zr = float(scalar_to_float(reduced_z(c, mm)))
            conditions["sheet"] = zr > tol if params.sign > 0 else zr < -tol

    residual = _magnitude(equations)
    scale = max(1.0, _magnitude([x, y, z, p, q, r])) ** 2
    member = residual <= tol * scale and all(conditions.values()) and not boundary
    if boundary:
        logger.warning("orbit point on the boundary of the %s sheet: x² + y² = 0", family.value)
    return OrbitMembership(family, residual, conditions, boundary, member)


def sample_family(
    family: OrbitFamily,
    rng: np.random.Generator,
    count: int,
    params: FamilyParams = FamilyParams(),
    *,
    spread: float = 0.5,
) -> list[JacobiDual]:
    """Push the family seed along ``count`` random elements of G^J."""
    seed = from_orbit_coordinates(family_seed(family, params), exact_kind=False)
    return [jacobi_coadjoint(_random_element(rng, 1, 1, spread), seed) for _ in range(count)]


def _random_element(rng: np.random.Generator, n: int, m: int, spread: float) -> JacobiElement:
    return JacobiElement(
        random_symplectic(rng, n, spread=spread), random_heis(rng, n, m, spread=spread)
    )


@dataclass(frozen=True)
class MinimalOrbitCheck:
    r_residual: float
    x_residual: float

    @property
    def residual(self) -> float:
        return max(self.r_residual, self.x_residual)


def _check_delta(delta: Matrix) -> None:
    rows, cols = shape(delta)
    if rows != cols or not is_symmetric(delta, None if is_exact(delta) else 1e-12):
        raise DomainError("δ must be a symmetric square matrix")
    value = det(delta)
    if (value == 0) if is_exact(delta) else abs(value) <= 1e-12:
        raise DomainError("δ is singular")


def minimal_orbit_check(F: JacobiDual, delta: Matrix) -> MinimalOrbitCheck:
    """Operator-norm residuals of δ = r and X J_n = (p; q) δ⁻¹ ^t(p; q)."""
    _check_delta(delta)
    n, m = F.dims
    if shape(delta) != (m, m):
        raise DomainError({"reason": "dimension mismatch", "delta": shape(delta), "m": m})
    exact_kind = F.exact and is_exact(delta)
    if not exact_kind:
        F = F.as_float()
        delta = to_carrier(delta, False)
    pq = F.p.col_join(F.q) if exact_kind else np.vstack([F.p, F.q])
    lhs = F.sp_part @ J(n, exact_kind)
    rhs = pq @ inverse(delta) @ pq.T
    return MinimalOrbitCheck(operator_norm(F.r - delta), operator_norm(lhs - rhs))


def minimal_seed(delta: Matrix, n: int) -> JacobiDual:
    """F₀ with r = δ and every other block zero."""
    _check_delta(delta)
    m, _ = shape(delta)
    exact_kind = is_exact(delta)
    zero = JacobiDual.zero(n, m, exact_kind)
    return JacobiDual(zero.x, zero.p, zero.y, zero.z, zero.q, delta)


def minimal_orbit_dimension(delta: Matrix, n: int) -> int:
    """Rank of the tangent map at the seed: 2mn, which is 2n for m = 1."""
    return orbit_dimension(minimal_seed(delta, n))


def sample_minimal_orbit(
    delta: Matrix, n: int, rng: np.random.Generator, count: int, *, spread: float = 0.5
) -> list[JacobiDual]:
    seed = minimal_seed(to_carrier(delta, False), n)
    m, _ = shape(delta)
    return [jacobi_coadjoint(_random_element(rng, n, m, spread), seed) for _ in range(count)]


def orbit_point_from_parameters(
    h: Scalar, a: Scalar, b: Scalar, c: Scalar, d: Scalar, lam: Scalar, mu: Scalar
) -> OrbitCoordinates:
    """The Ω_hR point parametrized by g = (a, b, c, d; λ, µ).

    With u = aµ − bλ and v = cµ − dλ: x = huv, y + z = −hu², y − z = hv², p = hu, q = hv.
    """
    u = a * mu - b * lam
    v = c * mu - d * lam
    y_plus_z = -h * u**2
    y_minus_z = h * v**2
    return OrbitCoordinates(
        x=h * u * v,
        y=(y_plus_z + y_minus_z) / 2,
        z=(y_plus_z - y_minus_z) / 2,
        p=h * u,
        q=h * v,
        r=h,
    )

