from __future__ import annotations

from pydantic import BaseModel, ConfigDict

from orbitkit.schemas.matrix import MatrixIn


class MatrixRequest(BaseModel):
    """A single square matrix."""

    A: MatrixIn

    model_config = ConfigDict(
        json_schema_extra={"example": {"A": [[0, 1], [-1, 0]]}},
    )


class SymplecticRequest(BaseModel):
    M: MatrixIn

    model_config = ConfigDict(
        json_schema_extra={"example": {"M": [[2, 1], [1, 1]]}},
    )


class MoebiusRequest(BaseModel):
    M: MatrixIn
    Z: MatrixIn

    model_config = ConfigDict(
        json_schema_extra={"example": {"M": [[0, 1], [-1, 0]], "Z": [[{"re": 0, "im": 2}]]}},
    )
