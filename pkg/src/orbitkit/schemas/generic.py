"""Generic output envelopes shared by every command."""

from __future__ import annotations

from typing import Any, Generic, TypeVar

from pydantic import BaseModel, ConfigDict, Field

T = TypeVar("T")


class Report(BaseModel, Generic[T]):
    """Result envelope; keys are emitted in declaration order."""

    op: str
    inputs: dict[str, Any]
    result: T
    residual: float | None = None
    tolerance: float | None = None
    passed: bool | None = Field(default=None, alias="pass")

    model_config = ConfigDict(
        populate_by_name=True,
        json_schema_extra={
            "example": {
                "op": "heis coadjoint",
                "inputs": {"x": {"lam": [["2"]], "mu": [["3"]], "kappa": [["0"]]}},
                "result": {"a": [["3"]], "b": [["-2"]], "c": [["1"]]},
                "residual": 0.0,
                "tolerance": 1e-10,
                "pass": True,
            }
        },
    )


class ErrorDetail(BaseModel):
    kind: str
    detail: str | dict[str, Any]


class ErrorReport(BaseModel):
    """Standard error envelope, written to stdout with a nonzero exit status."""

    error: ErrorDetail

    model_config = ConfigDict(
        json_schema_extra={
            "example": {"error": {"kind": "domain", "detail": "S is not positive definite"}}
        },
    )
