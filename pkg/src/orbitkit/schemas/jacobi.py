from __future__ import annotations

from typing import Literal, Union

from pydantic import BaseModel, ConfigDict, Field, StrictInt, model_validator

from orbitkit.jacobi.algebra import JacobiDual, JacobiLieElement
from orbitkit.jacobi.group import IwasawaMode, JacobiElement, JacobiPoint
from orbitkit.jacobi.orbits import FamilyParams
from orbitkit.jacobi_forms.fourier import DEFAULT_V, DEFAULT_Y
from orbitkit.jacobi_forms.theta import ThetaSpec
from orbitkit.schemas.matrix import MatrixIn, encode, parse_matrix, parse_scalar
from orbitkit.symplectic import SiegelPoint, SymplecticElement


class SymplecticIn(BaseModel):
    M: MatrixIn

    model_config = ConfigDict(
        json_schema_extra={"example": {"M": [[1, 1], [0, 1]]}},
    )

    def build(self, exact_kind: bool, tol: float = 1e-10) -> SymplecticElement:
        return SymplecticElement.of(parse_matrix(self.M, exact_kind), tol)

    @staticmethod
    def dump(g: SymplecticElement) -> dict:
        return encode({"M": g.M})


class JacobiElementIn(BaseModel):
    """(M, (λ, µ, κ)) with M ∈ Sp(n,ℝ) of size 2n and λ, µ ∈ ℝ^{(m,n)}."""

    M: MatrixIn
    lam: MatrixIn
    mu: MatrixIn
    kappa: MatrixIn

    model_config = ConfigDict(
        json_schema_extra={
            "example": {"M": [[0, 1], [-1, 0]], "lam": [[1]], "mu": [[0]], "kappa": [[0]]}
        },
    )

    def build(self, exact_kind: bool, tol: float = 1e-10) -> JacobiElement:
        return JacobiElement.of(
            parse_matrix(self.M, exact_kind),
            parse_matrix(self.lam, exact_kind),
            parse_matrix(self.mu, exact_kind),
            parse_matrix(self.kappa, exact_kind),
            tol,
        )

    @staticmethod
    def dump(g: JacobiElement) -> dict:
        return encode({"M": g.M.M, "lam": g.heis.lam, "mu": g.heis.mu, "kappa": g.heis.kappa})


class JacobiLieIn(BaseModel):
    """(X, P, Q, R) with X ∈ sp(n,ℝ) and R symmetric."""

    X: MatrixIn
    P: MatrixIn
    Q: MatrixIn
    R: MatrixIn

    def build(self, exact_kind: bool) -> JacobiLieElement:
        return JacobiLieElement.of(
            parse_matrix(self.X, exact_kind),
            parse_matrix(self.P, exact_kind),
            parse_matrix(self.Q, exact_kind),
            parse_matrix(self.R, exact_kind),
        )


class JacobiDualIn(BaseModel):
    """F(x, p, y, z, q, r); y, z and r symmetric."""

    x: MatrixIn
    p: MatrixIn
    y: MatrixIn
    z: MatrixIn
    q: MatrixIn
    r: MatrixIn

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "x": [[0]], "p": [[0]], "y": [[0]], "z": [[1]], "q": [[0]], "r": [[0]],
            }
        },
    )

    def build(self, exact_kind: bool) -> JacobiDual:
        return JacobiDual.of(
            *(parse_matrix(getattr(self, k), exact_kind) for k in ("x", "p", "y", "z", "q", "r"))
        )

    @staticmethod
    def dump(F: JacobiDual) -> dict:
        return encode({"x": F.x, "p": F.p, "y": F.y, "z": F.z, "q": F.q, "r": F.r})


class SiegelPointIn(BaseModel):
    Z: MatrixIn

    model_config = ConfigDict(
        json_schema_extra={"example": {"Z": [[{"re": 0, "im": 1}]]}},
    )

    def build(self, tol: float = 1e-10) -> SiegelPoint:
        return SiegelPoint.of(parse_matrix(self.Z, False), tol)

    @staticmethod
    def dump(Z: SiegelPoint) -> dict:
        return encode({"Z": Z.Z})


class JacobiPointIn(BaseModel):
    """(Z, W) ∈ H_n × ℂ^{(m,n)}."""

    Z: MatrixIn
    W: MatrixIn

    model_config = ConfigDict(
        json_schema_extra={"example": {"Z": [[{"re": 0, "im": 1}]], "W": [[0]]}},
    )

    def build(self, tol: float = 1e-10) -> JacobiPoint:
        return JacobiPoint.of(parse_matrix(self.Z, False), parse_matrix(self.W, False), tol)

    @staticmethod
    def dump(pt: JacobiPoint) -> dict:
        return encode({"Z": pt.Z.Z, "W": pt.W})


class ThetaSpecIn(BaseModel):
    """Lattice data (S, c) and the box radius of the truncated sum."""

    S: list[list[int]]
    c: list[list[int]]
    radius: int | None = Field(default=None, ge=1)

    model_config = ConfigDict(
        json_schema_extra={"example": {"S": [[2, 0], [0, 2]], "c": [[1], [1]], "radius": 6}},
    )

    def build(self, default_radius: int | None = None) -> ThetaSpec:
        radius = self.radius if self.radius is not None else default_radius
        return ThetaSpec.of(self.S, self.c, radius)

    @staticmethod
    def dump(spec: ThetaSpec) -> dict:
        return encode({"S": spec.S, "c": spec.c, "radius": spec.radius})


class JacobiElementRequest(BaseModel):
    g: JacobiElementIn


class JacobiMulRequest(BaseModel):
    g1: JacobiElementIn
    g2: JacobiElementIn


class JacobiActRequest(BaseModel):
    g: JacobiElementIn
    point: JacobiPointIn

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "g": {"M": [[0, 1], [-1, 0]], "lam": [[1]], "mu": [[0]], "kappa": [[0]]},
                "point": {"Z": [[{"re": 0, "im": 1}]], "W": [[0]]},
            }
        },
    )


class JacobiIwasawaRequest(BaseModel):
    g: JacobiElementIn
    mode: IwasawaMode = IwasawaMode.NTILDE_A_K


class JacobiDifferentialRequest(BaseModel):
    """Tangent direction (v, w) at (iE_n, 0); v symmetric n×n, w m×n."""

    g: JacobiElementIn
    v: MatrixIn
    w: MatrixIn


class DimsRequest(BaseModel):
    n: int = Field(default=1, ge=1)
    m: int = Field(default=1, ge=1)


class JacobiTableRequest(DimsRequest):
    verify: bool = False
    printed: bool = False
    lemma: Literal["real", "complex"] = "real"

    model_config = ConfigDict(
        json_schema_extra={"example": {"n": 1, "m": 1, "verify": True}},
    )


class KillingRequest(BaseModel):
    n: int = Field(default=1, ge=1, le=3)


class ComplexStructureRequest(BaseModel):
    """Tangent data ((Y X; X −Y), (P, Q)) at (iE_n, 0)."""

    Y: MatrixIn
    X: MatrixIn
    P: MatrixIn
    Q: MatrixIn


class JacobiCoadjointRequest(BaseModel):
    g: JacobiElementIn
    F: JacobiDualIn


class JacobiPairingRequest(BaseModel):
    F: JacobiDualIn
    X: JacobiLieIn


ParamIn = Union[StrictInt, float, str]


class FamilyParamsIn(BaseModel):
    h: ParamIn = 1
    m: ParamIn = 1
    alpha: ParamIn = 0
    k: ParamIn = 1
    sign: Literal[1, -1] = 1

    def build(self, exact_kind: bool) -> FamilyParams:
        return FamilyParams(
            h=parse_scalar(self.h, exact_kind),
            m=parse_scalar(self.m, exact_kind),
            alpha=parse_scalar(self.alpha, exact_kind),
            k=parse_scalar(self.k, exact_kind),
            sign=self.sign,
        )


class OrbitCheckRequest(BaseModel):
    """Membership of F (n = m = 1) in one of the coadjoint orbit families."""

    F: JacobiDualIn
    family: str
    params: FamilyParamsIn = FamilyParamsIn()

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "F": {"x": [[0]], "p": [[0]], "y": [[0]], "z": [[1]], "q": [[0]], "r": [[0]]},
                "family": "Z",
            }
        },
    )


class OrbitSampleRequest(BaseModel):
    family: str
    params: FamilyParamsIn = FamilyParamsIn()
    count: int = Field(default=5, ge=1, le=1000)
    seed: int = 0


class MinimalOrbitRequest(BaseModel):
    F: JacobiDualIn
    delta: MatrixIn


class MinimalDimensionRequest(BaseModel):
    delta: MatrixIn
    n: int = Field(default=1, ge=1)


class ThetaEvalRequest(BaseModel):
    spec: ThetaSpecIn
    point: JacobiPointIn

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "spec": {"S": [[2, 0], [0, 2]], "c": [[1], [1]]},
                "point": {"Z": [[{"re": 0, "im": 1}]], "W": [[0]]},
            }
        },
    )


class ThetaInvarianceRequest(BaseModel):
    spec: ThetaSpecIn
    generator: Literal["translation", "lambda", "mu", "inversion"] | None = None
    element: JacobiElementIn | None = None
    points: list[JacobiPointIn] | None = None
    tolerance: float = Field(default=1e-8, gt=0)

    @model_validator(mode="after")
    def one_generator(self) -> "ThetaInvarianceRequest":
        if (self.generator is None) == (self.element is None):
            raise ValueError("give exactly one of generator and element")
        return self


class FourierRequest(BaseModel):
    spec: ThetaSpecIn
    T: ParamIn
    R: int
    Y: float = Field(default=DEFAULT_Y, gt=0)
    V: float = Field(default=DEFAULT_V, ge=0)
    grid: int | None = Field(default=None, ge=64, le=256)
    tolerance: float = Field(default=1e-6, gt=0)


class LatticeCountRequest(BaseModel):
    spec: ThetaSpecIn
    T: ParamIn
    R: int
