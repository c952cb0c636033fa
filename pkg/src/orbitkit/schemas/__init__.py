"""Pydantic request models and the report envelopes written by the command line."""

from __future__ import annotations

from orbitkit.schemas.generic import ErrorDetail, ErrorReport, Report
from orbitkit.schemas.matrix import MatrixIn, encode, parse_matrix, parse_scalar

__all__ = [
    "ErrorDetail",
    "ErrorReport",
    "MatrixIn",
    "Report",
    "encode",
    "parse_matrix",
    "parse_scalar",
]
