from __future__ import annotations

import logging

import numpy as np
import sympy

from orbitkit.core.errors import DomainError
from orbitkit.linalg.kinds import Matrix, Scalar, is_exact, is_skew, shape

logger = logging.getLogger(__name__)


def pfaffian(A: Matrix, tol: float | None = None) -> Scalar:
    """Pfaffian of a skew-symmetric matrix of even degree.

    Skew Gaussian elimination: pivot the largest (float) or first nonzero (exact)
    entry of the leading row into position (0, 1), eliminate rows and columns 2..
    with the congruence that preserves skewness, and recurse on the trailing block.

    Args:
        A: Skew-symmetric matrix, exact or float.
        tol: Skewness tolerance; required for float input.

    Returns:
        Pf(A), normalized so that Pf([[0, 1], [-1, 0]]) = 1.
    """
    rows, cols = shape(A)
    if rows != cols:
        raise DomainError(f"pfaffian needs a square matrix, got {rows}x{cols}")
    if rows % 2:
        raise DomainError(f"pfaffian needs even degree, got {rows}")
    exact_kind = is_exact(A)
    if not exact_kind and tol is None:
        raise ValueError("float pfaffian needs an explicit tolerance")
    if not is_skew(A, None if exact_kind else tol):
        raise DomainError("pfaffian input is not skew-symmetric")
    if rows == 0:
        return sympy.Integer(1) if exact_kind else 1.0
    return _pfaffian_exact(A) if exact_kind else _pfaffian_float(np.array(A, dtype=float))


def _pfaffian_exact(A: sympy.Matrix) -> sympy.Expr:
    M = [list(A.row(i)) for i in range(A.rows)]
    n = A.rows
    result = sympy.Integer(1)
    for k in range(0, n - 1, 2):
        pivot = next((j for j in range(k + 1, n) if M[k][j] != 0), None)
        if pivot is None:
            return sympy.Integer(0)
        if pivot != k + 1:
            _swap(M, k + 1, pivot)
            result = -result
        p = M[k][k + 1]
        result *= p
        for i in range(k + 2, n):
            f = M[k][i] / p
            g = M[k + 1][i] / p
            if f == 0 and g == 0:
                continue
            # row/column i -= f * (k+1) - g * k keeps the matrix skew.
            for j in range(n):
                M[i][j] = sympy.expand(M[i][j] - f * M[k + 1][j] + g * M[k][j])
            for j in range(n):
                M[j][i] = sympy.expand(M[j][i] - f * M[j][k + 1] + g * M[j][k])
    return sympy.nsimplify(result) if result.has(sympy.Float) else sympy.expand(result)


def _pfaffian_float(M: np.ndarray) -> float:
    n = M.shape[0]
    result = 1.0
    for k in range(0, n - 1, 2):
        pivot = k + 1 + int(np.argmax(np.abs(M[k, k + 1 :])))
        if M[k, pivot] == 0.0:
            return 0.0
        if pivot != k + 1:
            M[[k + 1, pivot], :] = M[[pivot, k + 1], :]
            M[:, [k + 1, pivot]] = M[:, [pivot, k + 1]]
            result = -result
        p = M[k, k + 1]
        result *= p
        if k + 2 < n:
            f = M[k, k + 2 :] / p
            g = M[k + 1, k + 2 :] / p
            M[k + 2 :, :] -= np.outer(f, M[k + 1, :]) - np.outer(g, M[k, :])
            M[:, k + 2 :] -= np.outer(M[:, k + 1], f) - np.outer(M[:, k], g)
    logger.debug("float pfaffian of degree %d = %r", n, result)
    return float(result)


def _swap(M: list[list[sympy.Expr]], a: int, b: int) -> None:
    M[a], M[b] = M[b], M[a]
    for row in M:
        row[a], row[b] = row[b], row[a]
