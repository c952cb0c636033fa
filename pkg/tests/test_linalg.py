"""Tests for scalar kinds, the Pfaffian, SPD logarithms and the Jordan decomposition."""

from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest
import sympy

from orbitkit.core.errors import DomainError
from orbitkit.linalg import (
    ElementClass,
    ScalarKind,
    classify_element,
    jordan_decompose,
    kind_of,
    matrix_exp,
    matrix_log_spd,
    pfaffian,
    spd_sqrt,
)
from orbitkit.linalg.kinds import exact, exact_scalar, is_zero, residual, to_float


class TestScalarKinds:
    """Exact and float carriers."""

    def test_rational_string_is_exact(self) -> None:
        """'p/q' strings become sympy rationals."""
        assert exact_scalar("3/4") == sympy.Rational(3, 4)

    def test_float_converts_through_binary_value(self) -> None:
        """A float keeps its exact binary value, not its decimal reading."""
        assert exact_scalar(0.1) == sympy.Rational(Fraction(0.1))
        assert exact_scalar(0.1) != sympy.Rational(1, 10)

    def test_bad_literal_is_domain_error(self) -> None:
        """Unparseable strings raise DomainError."""
        with pytest.raises(DomainError):
            exact_scalar("one half")

    def test_kind_detection(self) -> None:
        """Each carrier reports its scalar kind."""
        assert kind_of(exact([[1, 2]])) is ScalarKind.EXACT_RATIONAL
        assert kind_of(sympy.Matrix([[sympy.I]])) is ScalarKind.EXACT_COMPLEX_RATIONAL
        assert kind_of(np.eye(2)) is ScalarKind.REAL64
        assert kind_of(1j * np.eye(2)) is ScalarKind.COMPLEX64

    def test_float_zero_test_needs_tolerance(self) -> None:
        """Float comparisons never fall back to an implicit tolerance."""
        with pytest.raises(ValueError):
            is_zero(np.zeros((2, 2)))

    def test_exact_residual_is_zero(self) -> None:
        """Equal exact matrices have residual exactly 0.0."""
        A = exact([["1/3", 2], [0, "-5/7"]])
        assert residual(A, A.copy()) == 0.0


class TestPfaffian:
    """Pfaffian by skew elimination."""

    def test_standard_symplectic_form(self) -> None:
        """Pf(J_1) = 1."""
        assert pfaffian(exact([[0, 1], [-1, 0]])) == 1

    def test_four_by_four_closed_form(self) -> None:
        """Pf = af − be + cd for the generic 4×4 skew matrix."""
        a, b, c, d, e, f = 1, 2, 3, 4, 5, 6
        A = exact([[0, a, b, c], [-a, 0, d, e], [-b, -d, 0, f], [-c, -e, -f, 0]])
        assert pfaffian(A) == a * f - b * e + c * d

    def test_square_equals_determinant(self, rational_matrix) -> None:
        """Pf(A)² = det A exactly on random rational skew matrices."""
        for _ in range(5):
            B = rational_matrix(6, 6)
            A = B - B.T
            assert sympy.simplify(pfaffian(A) ** 2 - A.det()) == 0

    def test_zero_leading_row_gives_zero(self) -> None:
        """A skew matrix with a zero row has Pfaffian 0."""
        A = exact([[0, 0, 0, 0], [0, 0, 1, 2], [0, -1, 0, 3], [0, -2, -3, 0]])
        assert pfaffian(A) == 0

    def test_float_agrees_with_exact(self, rational_matrix) -> None:
        """The float path matches the exact value."""
        B = rational_matrix(4, 4)
        A = B - B.T
        expected = float(pfaffian(A))
        assert pfaffian(to_float(A), 1e-12) == pytest.approx(expected, abs=1e-10)

    def test_odd_degree_rejected(self) -> None:
        """Odd degree is a domain error."""
        with pytest.raises(DomainError, match="even degree"):
            pfaffian(sympy.zeros(3, 3))

    def test_non_skew_rejected(self) -> None:
        """A symmetric input is a domain error."""
        with pytest.raises(DomainError, match="skew"):
            pfaffian(exact([[0, 1], [1, 0]]))

    def test_float_needs_tolerance(self) -> None:
        """Float input without a tolerance is a programming error."""
        with pytest.raises(ValueError):
            pfaffian(np.array([[0.0, 1.0], [-1.0, 0.0]]))


class TestSpdFunctions:
    """Square root and logarithm of SPD matrices."""

    def test_log_roundtrip(self, rng: np.random.Generator) -> None:
        """exp(log P) = P."""
        L = rng.normal(size=(3, 3))
        P = L @ L.T + np.eye(3)
        assert np.allclose(matrix_exp(matrix_log_spd(P)), P, atol=1e-10)

    def test_log_is_symmetric(self, rng: np.random.Generator) -> None:
        """The logarithm of an SPD matrix is symmetric."""
        L = rng.normal(size=(4, 4))
        X = matrix_log_spd(L @ L.T + np.eye(4))
        assert np.allclose(X, X.T)

    def test_sqrt_squares_back(self) -> None:
        """spd_sqrt(P)² = P."""
        P = np.array([[4.0, 1.0], [1.0, 3.0]])
        root = spd_sqrt(P)
        assert np.allclose(root @ root, P)

    def test_indefinite_rejected(self) -> None:
        """A matrix with a negative eigenvalue has no SPD logarithm."""
        with pytest.raises(DomainError, match="positive definite"):
            matrix_log_spd(np.diag([1.0, -2.0]))

    def test_non_symmetric_rejected(self) -> None:
        """A non-symmetric matrix is rejected."""
        with pytest.raises(DomainError, match="symmetric"):
            matrix_log_spd(np.array([[2.0, 1.0], [0.0, 2.0]]))


class TestJordanDecomposition:
    """Additive Jordan decomposition X = h + e + n."""

    def test_unipotent_block(self) -> None:
        """[[1,1],[0,1]] splits as the identity plus a nilpotent."""
        parts = jordan_decompose(np.array([[1.0, 1.0], [0.0, 1.0]]))
        assert np.allclose(parts.hyperbolic, np.eye(2))
        assert np.allclose(parts.elliptic, 0.0)
        assert np.allclose(parts.nilpotent, [[0.0, 1.0], [0.0, 0.0]])

    def test_rotation_is_elliptic(self) -> None:
        """A rotation generator is all elliptic."""
        X = np.array([[0.0, -1.0], [1.0, 0.0]])
        parts = jordan_decompose(X)
        assert np.allclose(parts.elliptic, X)
        assert np.allclose(parts.hyperbolic, 0.0, atol=1e-12)
        assert np.allclose(parts.nilpotent, 0.0, atol=1e-12)

    def test_parts_commute_and_sum(self, rng: np.random.Generator) -> None:
        """h, e, n commute pairwise and sum to X."""
        P = rng.normal(size=(4, 4))
        core = np.zeros((4, 4))
        core[:2, :2] = [[1.0, -2.0], [2.0, 1.0]]
        core[2:, 2:] = [[3.0, 1.0], [0.0, 3.0]]
        X = P @ core @ np.linalg.inv(P)
        parts = jordan_decompose(X)
        h, e, n = parts.hyperbolic, parts.elliptic, parts.nilpotent
        scale = np.linalg.norm(X)
        assert np.allclose(h + e + n, X)
        for A, B in ((h, e), (h, n), (e, n)):
            assert np.max(np.abs(A @ B - B @ A)) < 1e-7 * scale**2
        assert np.max(np.abs(np.linalg.matrix_power(n, 4))) < 1e-6 * scale**4

    def test_complex_input_rejected(self) -> None:
        """Only real matrices are decomposed."""
        with pytest.raises(DomainError, match="real"):
            jordan_decompose(np.array([[1j, 0.0], [0.0, 1.0]]))


class TestClassifyElement:
    """Element classes from the Jordan parts."""

    @pytest.mark.parametrize(
        ("X", "expected"),
        [
            ([[0.0, 1.0], [0.0, 0.0]], ElementClass.NILPOTENT),
            ([[1.0, 0.0], [0.0, -1.0]], ElementClass.HYPERBOLIC),
            ([[0.0, -1.0], [1.0, 0.0]], ElementClass.ELLIPTIC),
            ([[1.0, -1.0], [1.0, 1.0]], ElementClass.SEMISIMPLE_MIXED),
            ([[1.0, 1.0], [0.0, 1.0]], ElementClass.GENERAL),
        ],
    )
    def test_classes(self, X: list[list[float]], expected: ElementClass) -> None:
        """Each representative lands in its class."""
        assert classify_element(np.array(X)) is expected
