"""Scalar kinds and the two matrix carriers.

Exact kinds (``ExactRational`` and ``ExactComplexRational``) are carried by
``sympy.Matrix`` with ``Rational`` / ``Rational + I*Rational`` entries. Float kinds
(``Real64`` and ``Complex64``) are carried by ``numpy.ndarray`` of dtype float64 or
complex128. Every float predicate takes its tolerance explicitly.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence, TypeAlias, Union

import numpy as np
import scipy.linalg
import sympy

from orbitkit.core.errors import DomainError

Matrix: TypeAlias = Union[sympy.Matrix, np.ndarray]
Scalar: TypeAlias = Union[sympy.Expr, int, float, complex]


class ScalarKind(Enum):
    EXACT_RATIONAL = "exact_rational"
    EXACT_COMPLEX_RATIONAL = "exact_complex_rational"
    REAL64 = "real64"
    COMPLEX64 = "complex64"

    @property
    def is_exact(self) -> bool:
        return self in (ScalarKind.EXACT_RATIONAL, ScalarKind.EXACT_COMPLEX_RATIONAL)


def is_exact(A: Matrix) -> bool:
    return isinstance(A, sympy.MatrixBase)


def kind_of(A: Matrix) -> ScalarKind:
    if is_exact(A):
        if any(not sympy.im(entry).is_zero for entry in A):
            return ScalarKind.EXACT_COMPLEX_RATIONAL
        return ScalarKind.EXACT_RATIONAL
    if np.iscomplexobj(A):
        return ScalarKind.COMPLEX64
    return ScalarKind.REAL64


def exact_scalar(value: object) -> sympy.Expr:
    """Convert ``int``, ``Fraction``, ``"p/q"`` strings, floats or complex to an exact scalar.

    Floats are converted through their exact binary value.
    """
    if isinstance(value, sympy.Basic):
        return sympy.nsimplify(value, rational=True) if value.has(sympy.Float) else value
    if isinstance(value, bool):
        raise DomainError(f"boolean is not a scalar: {value!r}")
    if isinstance(value, int):
        return sympy.Integer(value)
    if isinstance(value, Fraction):
        return sympy.Rational(value.numerator, value.denominator)
    if isinstance(value, str):
        try:
            return sympy.Rational(Fraction(value.strip()))
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"not a rational literal: {value!r}") from exc
    if isinstance(value, complex):
        return exact_scalar(value.real) + sympy.I * exact_scalar(value.imag)
    if isinstance(value, (float, np.floating)):
        return sympy.Rational(Fraction(float(value)))
    if isinstance(value, np.integer):
        return sympy.Integer(int(value))
    if isinstance(value, np.complexfloating):
        return exact_scalar(complex(value))
    raise DomainError(f"unsupported scalar: {value!r}")


def exact(rows: Iterable[Sequence[object]] | Matrix) -> sympy.Matrix:
    if isinstance(rows, sympy.MatrixBase):
        return sympy.Matrix(rows)
    if isinstance(rows, np.ndarray):
        return sympy.Matrix(rows.shape[0], rows.shape[1], [exact_scalar(v) for v in rows.flat])
    return sympy.Matrix([[exact_scalar(v) for v in row] for row in rows])


def to_float(A: Matrix) -> np.ndarray:
    if isinstance(A, np.ndarray):
        return A
    if kind_of(A) is ScalarKind.EXACT_COMPLEX_RATIONAL:
        return np.array(A.evalf(), dtype=np.complex128)
    return np.array(A.evalf(), dtype=np.float64)


def as_float(rows: Iterable[Sequence[object]] | Matrix) -> np.ndarray:
    if isinstance(rows, (np.ndarray, sympy.MatrixBase)):
        return to_float(rows)
    array = np.array(rows)
    if np.iscomplexobj(array):
        return array.astype(np.complex128)
    return array.astype(np.float64)


def to_carrier(rows: Iterable[Sequence[object]] | Matrix, exact_kind: bool) -> Matrix:
    return exact(rows) if exact_kind else as_float(rows)


def like(template: Matrix, A: Matrix) -> Matrix:
    """Move ``A`` onto the carrier of ``template``."""
    return exact(A) if is_exact(template) else to_float(A)


def identity(n: int, exact_kind: bool = False) -> Matrix:
    return sympy.eye(n) if exact_kind else np.eye(n)


def zeros(rows: int, cols: int, exact_kind: bool = False) -> Matrix:
    return sympy.zeros(rows, cols) if exact_kind else np.zeros((rows, cols))


def unit(rows: int, cols: int, i: int, j: int, exact_kind: bool = True) -> Matrix:
    """The matrix unit E_ij (zero-based indices)."""
    E = zeros(rows, cols, exact_kind)
    E[i, j] = 1
    return E


def block(rows: Sequence[Sequence[Matrix]]) -> Matrix:
    exact_kind = any(is_exact(entry) for row in rows for entry in row)
    if exact_kind:
        return sympy.Matrix.vstack(*[sympy.Matrix.hstack(*[exact(e) for e in row]) for row in rows])
    return np.block([[to_float(e) for e in row] for row in rows])


def shape(A: Matrix) -> tuple[int, int]:
    return (A.rows, A.cols) if is_exact(A) else A.shape


def trace(A: Matrix) -> Scalar:
    return A.trace() if is_exact(A) else np.trace(A)


def det(A: Matrix) -> Scalar:
    return A.det() if is_exact(A) else np.linalg.det(A)


def inverse(A: Matrix) -> Matrix:
    rows, cols = shape(A)
    if rows != cols:
        raise DomainError(f"cannot invert a {rows}x{cols} matrix")
    if is_exact(A):
        if A.det() == 0:
            raise DomainError("singular matrix")
        return A.inv()
    try:
        return np.linalg.inv(A)
    except np.linalg.LinAlgError as exc:
        raise DomainError("singular matrix") from exc


def conj(A: Matrix) -> Matrix:
    return A.conjugate() if is_exact(A) else np.conj(A)


def commutator(A: Matrix, B: Matrix) -> Matrix:
    return A @ B - B @ A


def sym(A: Matrix) -> Matrix:
    return (A + A.T) / 2


def max_abs(A: Matrix) -> float:
    if is_exact(A):
        return max((float(abs(sympy.N(v))) for v in A), default=0.0)
    return float(np.max(np.abs(A))) if A.size else 0.0


def operator_norm(A: Matrix) -> float:
    F = to_float(A)
    return float(np.linalg.norm(F, 2)) if F.size else 0.0


def is_zero(A: Matrix, tol: float | None = None) -> bool:
    """Exact zero test for exact carriers; ``max|a_ij| <= tol`` for float carriers."""
    if is_exact(A):
        verdict = A.is_zero_matrix
        if verdict is None:
            verdict = all(sympy.expand(v) == 0 for v in A)
        return bool(verdict)
    if tol is None:
        raise ValueError("float comparisons need an explicit tolerance")
    return max_abs(A) <= tol


def matrices_equal(A: Matrix, B: Matrix, tol: float | None = None) -> bool:
    if shape(A) != shape(B):
        return False
    if is_exact(A) and is_exact(B):
        return is_zero(A - B)
    return is_zero(to_float(A) - to_float(B), tol)


def is_symmetric(A: Matrix, tol: float | None = None) -> bool:
    rows, cols = shape(A)
    return rows == cols and is_zero(A - A.T, tol)


def is_skew(A: Matrix, tol: float | None = None) -> bool:
    rows, cols = shape(A)
    return rows == cols and is_zero(A + A.T, tol)


def residual(A: Matrix, B: Matrix) -> float:
    """Largest absolute entrywise difference, as a float (0.0 for exact equality)."""
    if is_exact(A) and is_exact(B):
        return 0.0 if is_zero(A - B) else max_abs((A - B).applyfunc(sympy.expand))
    return max_abs(to_float(A) - to_float(B))


def rank(A: Matrix, tol: float | None = None) -> int:
    if is_exact(A):
        return A.rank(simplify=True)
    if tol is None:
        raise ValueError("float rank needs an explicit tolerance")
    return int(np.linalg.matrix_rank(A, tol=tol)) if A.size else 0


def null_space(A: Matrix, tol: float | None = None) -> list[Matrix]:
    """Basis of the right null space as a list of column vectors."""
    if is_exact(A):
        return A.nullspace(simplify=True)
    if tol is None:
        raise ValueError("float null space needs an explicit tolerance")
    basis = scipy.linalg.null_space(A, rcond=tol)
    return [basis[:, [j]] for j in range(basis.shape[1])]


def vec(A: Matrix) -> Matrix:
    """Row-major flattening into a column."""
    rows, cols = shape(A)
    if is_exact(A):
        return A.reshape(rows * cols, 1)
    return A.reshape(rows * cols, 1)


def hstack(columns: Sequence[Matrix]) -> Matrix:
    if any(is_exact(c) for c in columns):
        return sympy.Matrix.hstack(*[exact(c) for c in columns])
    return np.hstack(columns)


def scalar_to_float(value: Scalar) -> float | complex:
    if isinstance(value, sympy.Basic):
        number = complex(sympy.N(value))
        return number.real if number.imag == 0 else number
    return value


def assemble(
    sizes: Sequence[int], entries: dict[tuple[int, int], Matrix], exact_kind: bool
) -> Matrix:
    """Block matrix with the given block sizes; absent blocks are zero (indices zero-based)."""
    rows = []
    for i, rows_i in enumerate(sizes):
        row = []
        for j, cols_j in enumerate(sizes):
            entry = entries.get((i, j))
            row.append(entry if entry is not None else zeros(rows_i, cols_j, exact_kind))
        rows.append(row)
    if exact_kind:
        return sympy.Matrix.vstack(*[sympy.Matrix.hstack(*[exact(e) for e in r]) for r in rows])
    return np.block([[to_float(e) for e in r] for r in rows])


def sub_block(A: Matrix, sizes: Sequence[int], i: int, j: int) -> Matrix:
    """Block (i, j) of ``A`` for the block sizes ``sizes`` (zero-based)."""
    offsets = [0]
    for size in sizes:
        offsets.append(offsets[-1] + size)
    return A[offsets[i] : offsets[i + 1], offsets[j] : offsets[j + 1]]
