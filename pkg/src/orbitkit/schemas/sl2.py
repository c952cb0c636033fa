from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field

from orbitkit.schemas.matrix import MatrixIn, encode, parse_matrix
from orbitkit.sl2 import Ambient, AmbientKind, Sl2Triple


class AmbientIn(BaseModel):
    kind: AmbientKind
    n: int = Field(ge=1)

    def build(self) -> Ambient:
        return Ambient(self.kind, self.n)


class TripleIn(BaseModel):
    """(H, X, Y) with [H,X] = 2X, [H,Y] = −2Y and [X,Y] = H."""

    H: MatrixIn
    X: MatrixIn
    Y: MatrixIn
    ambient: AmbientIn | None = None

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "H": [[1, 0], [0, -1]],
                "X": [[0, 1], [0, 0]],
                "Y": [[0, 0], [1, 0]],
                "ambient": {"kind": "sl", "n": 2},
            }
        },
    )

    def build(self, exact_kind: bool) -> Sl2Triple:
        return Sl2Triple(
            parse_matrix(self.H, exact_kind),
            parse_matrix(self.X, exact_kind),
            parse_matrix(self.Y, exact_kind),
            self.ambient.build() if self.ambient else None,
        )

    @staticmethod
    def dump(t: Sl2Triple) -> dict:
        payload = {"H": t.H, "X": t.X, "Y": t.Y}
        if t.ambient is not None:
            payload["ambient"] = {"kind": t.ambient.kind.value, "n": t.ambient.n}
        return encode(payload)


class TripleRequest(BaseModel):
    triple: TripleIn


class CompletionRequest(BaseModel):
    """A nonzero nilpotent E of the ambient algebra."""

    E: MatrixIn
    ambient: AmbientIn

    model_config = ConfigDict(
        json_schema_extra={
            "example": {"E": [[0, 1], [0, 0]], "ambient": {"kind": "sl", "n": 2}},
        },
    )


class BasisRequest(BaseModel):
    basis: Literal["standard", "normal"] = "standard"
