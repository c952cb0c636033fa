"""Tests for the finite Schrödinger model of H^{(g,h)} over Z/N."""

from __future__ import annotations

import numpy as np
import pytest

from orbitkit.core.errors import DomainError
from orbitkit.heisenberg.schrodinger import (
    GridHeisElement,
    GridRep,
    central_character,
    commutant_dimension,
    grid_mul,
    rep_matrix,
    rep_trace,
)

CASES = [(3, 1, 1, [[1]]), (5, 1, 1, [[2]]), (5, 2, 1, [[1]]), (3, 1, 2, [[1, 0], [0, 1]])]


def _random_element(rng: np.random.Generator, R: GridRep) -> GridHeisElement:
    lam = rng.integers(0, R.N, size=(R.h, R.g))
    mu = rng.integers(0, R.N, size=(R.h, R.g))
    S = rng.integers(0, R.N, size=(R.h, R.h))
    kappa = np.triu(S) + np.triu(S, 1).T - mu @ lam.T
    return GridHeisElement.of(R, lam, mu, kappa)


class TestGridRep:
    """Validation of (N, g, h, c)."""

    def test_dimension(self) -> None:
        """The model has dimension N^{hg}."""
        assert GridRep.of(5, 2, 1, [[1]]).dimension == 25
        assert GridRep.of(3, 1, 2, [[1, 0], [0, 1]]).dimension == 9

    @pytest.mark.parametrize("N", [1, 2, 4])
    def test_rejects_bad_modulus(self, N: int) -> None:
        """N must be odd and at least 3."""
        with pytest.raises(DomainError, match="odd"):
            GridRep.of(N, 1, 1, [[1]])

    def test_rejects_non_invertible_c(self) -> None:
        """det c must be a unit mod N."""
        with pytest.raises(DomainError):
            GridRep.of(3, 1, 1, [[3]])

    def test_rejects_non_symmetric_c(self) -> None:
        """c must be symmetric mod N."""
        with pytest.raises(DomainError, match="symmetric"):
            GridRep.of(5, 1, 2, [[1, 1], [0, 1]])

    def test_rejects_non_integer_entries(self) -> None:
        """Grid elements are integer matrices."""
        R = GridRep.of(3, 1, 1, [[1]])
        with pytest.raises(DomainError, match="integer"):
            GridHeisElement.of(R, [[0.5]], [[0]], [[0]])

    def test_rejects_non_symmetric_core(self) -> None:
        """κ + µ^tλ must be symmetric mod N."""
        R = GridRep.of(3, 1, 2, [[1, 0], [0, 1]])
        with pytest.raises(DomainError, match="symmetric"):
            GridHeisElement.of(R, [[1], [0]], [[0], [1]], [[0, 0], [0, 0]])


class TestRepresentation:
    """π(x) on functions of the grid."""

    @pytest.mark.parametrize("N,g,h,c", CASES)
    def test_unitary(self, rng: np.random.Generator, N, g, h, c) -> None:
        """π(x) is unitary."""
        R = GridRep.of(N, g, h, c)
        U = rep_matrix(R, _random_element(rng, R))
        assert np.allclose(U @ U.conj().T, np.eye(R.dimension))

    @pytest.mark.parametrize("N,g,h,c", CASES)
    def test_homomorphism(self, rng: np.random.Generator, N, g, h, c) -> None:
        """π(x)π(y) = π(x ∘ y)."""
        R = GridRep.of(N, g, h, c)
        for _ in range(5):
            x, y = _random_element(rng, R), _random_element(rng, R)
            product = rep_matrix(R, x) @ rep_matrix(R, y)
            assert np.allclose(product, rep_matrix(R, grid_mul(R, x, y)))

    @pytest.mark.parametrize("N,g,h,c", CASES)
    def test_center_acts_by_character(self, N, g, h, c) -> None:
        """π(0, 0, κ) = ω^{σ(cκ)}·E."""
        R = GridRep.of(N, g, h, c)
        kappa = np.eye(h, dtype=np.int64)
        x = GridHeisElement.of(R, np.zeros((h, g)), np.zeros((h, g)), kappa)
        index, value = central_character(R, kappa)
        assert index == int(np.trace(np.asarray(c) @ kappa)) % N
        assert np.allclose(rep_matrix(R, x), value * np.eye(R.dimension))
        assert np.isclose(rep_trace(R, x), R.dimension * value)

    @pytest.mark.parametrize("N,g,h,c", CASES)
    def test_trace_vanishes_off_center(self, N, g, h, c) -> None:
        """tr π(x) = 0 when x is not central."""
        R = GridRep.of(N, g, h, c)
        zero = np.zeros((h, g), dtype=np.int64)
        unit = zero.copy()
        unit[0, 0] = 1
        shift = GridHeisElement.of(R, unit, zero, np.zeros((h, h)))
        multiplier = GridHeisElement.of(R, zero, unit, np.zeros((h, h)))
        assert abs(rep_trace(R, shift)) < 1e-9
        assert abs(rep_trace(R, multiplier)) < 1e-9


class TestCommutant:
    """Irreducibility through the commutant."""

    @pytest.mark.parametrize("N,g,h,c", CASES)
    def test_commutant_is_scalars(self, N, g, h, c) -> None:
        """Only scalars commute with π, so π is irreducible."""
        assert commutant_dimension(GridRep.of(N, g, h, c)) == 1

    def test_cap(self) -> None:
        """Models larger than the cap are refused."""
        with pytest.raises(DomainError):
            commutant_dimension(GridRep.of(5, 2, 2, [[1, 0], [0, 1]]), cap=125)
