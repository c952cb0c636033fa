from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field

from orbitkit.heisenberg.algebra import HeisDual, HeisLieElement
from orbitkit.heisenberg.group import HeisElement
from orbitkit.heisenberg.schrodinger import GridHeisElement, GridRep
from orbitkit.schemas.matrix import MatrixIn, encode, parse_matrix


class HeisElementIn(BaseModel):
    """(λ, µ, κ) in ∘-coordinates; λ and µ are h×g, κ is h×h."""

    lam: MatrixIn
    mu: MatrixIn
    kappa: MatrixIn

    model_config = ConfigDict(
        json_schema_extra={"example": {"lam": [[2]], "mu": [[3]], "kappa": [[0]]}},
    )

    def build(self, exact_kind: bool) -> HeisElement:
        return HeisElement.of(
            parse_matrix(self.lam, exact_kind),
            parse_matrix(self.mu, exact_kind),
            parse_matrix(self.kappa, exact_kind),
        )

    @staticmethod
    def dump(x: HeisElement) -> dict:
        return encode({"lam": x.lam, "mu": x.mu, "kappa": x.kappa})


class HeisLieIn(BaseModel):
    """X(α, β, γ) with γ symmetric."""

    alpha: MatrixIn
    beta: MatrixIn
    gamma: MatrixIn

    model_config = ConfigDict(
        json_schema_extra={"example": {"alpha": [[1]], "beta": [[0]], "gamma": [[0]]}},
    )

    def build(self, exact_kind: bool) -> HeisLieElement:
        return HeisLieElement.of(
            parse_matrix(self.alpha, exact_kind),
            parse_matrix(self.beta, exact_kind),
            parse_matrix(self.gamma, exact_kind),
        )

    @staticmethod
    def dump(X: HeisLieElement) -> dict:
        return encode({"alpha": X.alpha, "beta": X.beta, "gamma": X.gamma})


class HeisDualIn(BaseModel):
    """F(a, b, c) with c symmetric."""

    a: MatrixIn
    b: MatrixIn
    c: MatrixIn

    model_config = ConfigDict(
        json_schema_extra={"example": {"a": [[0]], "b": [[0]], "c": [[1]]}},
    )

    def build(self, exact_kind: bool) -> HeisDual:
        return HeisDual.of(
            parse_matrix(self.a, exact_kind),
            parse_matrix(self.b, exact_kind),
            parse_matrix(self.c, exact_kind),
        )

    @staticmethod
    def dump(F: HeisDual) -> dict:
        return encode({"a": F.a, "b": F.b, "c": F.c})


class GridRepIn(BaseModel):
    """Finite Schrödinger model on (ℤ/N)^{(h,g)}; N odd."""

    N: int = Field(ge=3)
    g: int = Field(ge=1)
    h: int = Field(ge=1)
    c: list[list[int]]

    model_config = ConfigDict(
        json_schema_extra={"example": {"N": 3, "g": 1, "h": 1, "c": [[1]]}},
    )

    def build(self) -> GridRep:
        return GridRep.of(self.N, self.g, self.h, self.c)


class GridHeisIn(BaseModel):
    lam: list[list[int]]
    mu: list[list[int]]
    kappa: list[list[int]]

    def build(self, R: GridRep) -> GridHeisElement:
        return GridHeisElement.of(R, self.lam, self.mu, self.kappa)

    @staticmethod
    def dump(x: GridHeisElement) -> dict:
        return encode({"lam": x.lam, "mu": x.mu, "kappa": x.kappa})


class HeisElementRequest(BaseModel):
    x: HeisElementIn


class HeisMulRequest(BaseModel):
    x: HeisElementIn
    y: HeisElementIn

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "x": {"lam": [[1]], "mu": [[0]], "kappa": [[0]]},
                "y": {"lam": [[0]], "mu": [[1]], "kappa": [[0]]},
            }
        },
    )


class HeisCoadjointRequest(BaseModel):
    x: HeisElementIn
    F: HeisDualIn

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "x": {"lam": [[2]], "mu": [[3]], "kappa": [[0]]},
                "F": {"a": [[0]], "b": [[0]], "c": [[1]]},
            }
        },
    )


class HeisPairingRequest(BaseModel):
    """⟨F, X⟩, or B_F(X, Y) when Y is given."""

    F: HeisDualIn
    X: HeisLieIn
    Y: HeisLieIn | None = None


class HeisLieRequest(BaseModel):
    X: HeisLieIn
    Y: HeisLieIn | None = None


class HeisDualRequest(BaseModel):
    F: HeisDualIn


class PolarizationRequest(BaseModel):
    c: MatrixIn
    g: int = Field(ge=1)

    model_config = ConfigDict(
        json_schema_extra={"example": {"c": [[1]], "g": 1}},
    )


class DualOrbitRequest(BaseModel):
    """A point (µ̂, κ̂) of the dual of the normal subgroup K."""

    mu_hat: MatrixIn
    kappa_hat: MatrixIn


class RepRequest(BaseModel):
    rep: GridRepIn
    x: GridHeisIn | None = None

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "rep": {"N": 3, "g": 1, "h": 1, "c": [[1]]},
                "x": {"lam": [[0]], "mu": [[0]], "kappa": [[1]]},
            }
        },
    )
