"""Scalar kinds, matrix carriers and the matrix algorithms the group modules build on."""

from orbitkit.linalg.expm import matrix_exp, matrix_log_spd, spd_sqrt
from orbitkit.linalg.jordan import ElementClass, JordanParts, classify_element, jordan_decompose
from orbitkit.linalg.kinds import Matrix, ScalarKind, kind_of
from orbitkit.linalg.pfaffian import pfaffian

__all__ = [
    "ElementClass",
    "JordanParts",
    "Matrix",
    "ScalarKind",
    "classify_element",
    "jordan_decompose",
    "kind_of",
    "matrix_exp",
    "matrix_log_spd",
    "pfaffian",
    "spd_sqrt",
]
