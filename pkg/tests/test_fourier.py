"""Tests for Fourier coefficients of Jacobi forms by two-dimensional quadrature."""

from __future__ import annotations

import numpy as np
import pytest

from orbitkit.core.errors import DomainError
from orbitkit.jacobi_forms import ThetaSpec, fourier_coefficient, lattice_count, theta_function


@pytest.fixture(scope="module")
def theta():
    return theta_function(ThetaSpec.of([[2, 0], [0, 2]], [[1], [1]]))


class TestFourierCoefficient:
    """c(T, R) of the theta series for S = 2E₂, c = ^t(1, 1)."""

    @pytest.mark.parametrize("T,R,expected", [(0, 0, 1), (1, 2, 2), (1, 3, 0), (2, 0, 2)])
    def test_matches_lattice_count(self, theta, T: int, R: int, expected: int) -> None:
        """Each coefficient counts lattice vectors with the given norm and pairing."""
        coefficient = fourier_coefficient(theta, T, R)
        assert abs(coefficient - expected) < 1e-6
        spec = ThetaSpec.of([[2, 0], [0, 2]], [[1], [1]])
        assert lattice_count(spec, T, R) == expected

    def test_shifted_contour(self, theta) -> None:
        """Moving the contour in Y and V leaves the coefficient unchanged."""
        base = fourier_coefficient(theta, 1, 2)
        shifted = fourier_coefficient(theta, 1, 2, Y=0.8, V=0.1, grid=96)
        assert abs(base - shifted) < 1e-6

    @pytest.mark.parametrize(
        "T,R,options",
        [
            (-1, 0, {}),
            ("1/3", 0, {}),
            (1, "1/2", {}),
            (1, 0, {"Y": 0.0}),
            (1, 0, {"V": -0.1}),
            (1, 0, {"grid": 32}),
        ],
    )
    def test_rejects_bad_input(self, theta, T, R, options) -> None:
        """2T and R must be integers, T ≥ 0, Y > 0, V ≥ 0 and the grid at least 64."""
        with pytest.raises(DomainError):
            fourier_coefficient(theta, T, R, **options)

    def test_constant_function(self) -> None:
        """A constant has only the (0, 0) coefficient."""

        def one(_):
            return 1.0

        assert np.isclose(fourier_coefficient(one, 0, 0), 1.0)
        assert abs(fourier_coefficient(one, 1, 0)) < 1e-9
