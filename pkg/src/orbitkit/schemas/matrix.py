"""JSON codec for scalars and matrices.

Input entries are JSON numbers, ``"p/q"`` strings or ``{"re": ..., "im": ...}`` objects.
Output writes exact rationals as ``"p/q"`` strings and complex entries as ``{"re", "im"}``
objects, so every emitted matrix parses back through :data:`MatrixIn`.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Annotated, Any, Union

import numpy as np
import sympy
from pydantic import AfterValidator, BaseModel, StrictInt

from orbitkit.core.errors import DomainError
from orbitkit.linalg.kinds import Matrix, exact_scalar


class ComplexIn(BaseModel):
    re: Union[StrictInt, float, str] = 0
    im: Union[StrictInt, float, str] = 0


ScalarIn = Union[StrictInt, float, str, ComplexIn]


def _rectangular(rows: list[list[ScalarIn]]) -> list[list[ScalarIn]]:
    if not rows or not rows[0]:
        raise ValueError("matrix must have at least one row and one column")
    if any(len(row) != len(rows[0]) for row in rows):
        raise ValueError("matrix rows must all have the same length")
    return rows


MatrixIn = Annotated[list[list[ScalarIn]], AfterValidator(_rectangular)]


def _exact_part(value: int | float | str) -> sympy.Expr:
    if isinstance(value, float):
        # Decimal reading: 0.1 is 1/10, not its binary expansion.
        return exact_scalar(repr(value))
    return exact_scalar(value)


def _float_part(value: int | float | str) -> float:
    if isinstance(value, str):
        try:
            return float(Fraction(value.strip()))
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"not a rational literal: {value!r}") from exc
    return float(value)


def parse_scalar(value: ScalarIn, exact_kind: bool) -> sympy.Expr | float | complex:
    if isinstance(value, ComplexIn):
        if exact_kind:
            return _exact_part(value.re) + sympy.I * _exact_part(value.im)
        return complex(_float_part(value.re), _float_part(value.im))
    return _exact_part(value) if exact_kind else _float_part(value)


def parse_matrix(rows: list[list[ScalarIn]], exact_kind: bool) -> Matrix:
    entries = [[parse_scalar(v, exact_kind) for v in row] for row in rows]
    if exact_kind:
        return sympy.Matrix(entries)
    array = np.array(entries)
    return array.astype(np.complex128 if np.iscomplexobj(array) else np.float64)


def _exact_text(value: sympy.Expr) -> str | float:
    if value.is_Rational:
        return str(value)
    return float(sympy.N(value))


def encode_scalar(value: Any) -> Any:
    if isinstance(value, sympy.Basic):
        value = sympy.nsimplify(value) if value.has(sympy.Float) else sympy.expand(value)
        re, im = value.as_real_imag()
        if im == 0:
            return _exact_text(re)
        return {"re": _exact_text(re), "im": _exact_text(im)}
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (complex, np.complexfloating)):
        value = complex(value)
        if value.imag == 0:
            return value.real
        return {"re": value.real, "im": value.imag}
    if isinstance(value, (float, np.floating)):
        return float(value)
    return value


def encode(value: Any) -> Any:
    """JSON-ready form of matrices, scalars and containers of them."""
    if isinstance(value, sympy.MatrixBase):
        return [[encode_scalar(v) for v in value.row(i)] for i in range(value.rows)]
    if isinstance(value, np.ndarray):
        if value.ndim == 0:
            return encode_scalar(value.item())
        return [encode(v) for v in value]
    if isinstance(value, BaseModel):
        return encode(value.model_dump(by_alias=True))
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, dict):
        return {str(k): encode(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [encode(v) for v in value]
    return encode_scalar(value)
