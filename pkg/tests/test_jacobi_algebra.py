"""Tests for the Jacobi Lie algebra, its dual, the pairing and the coadjoint action."""

from __future__ import annotations

import numpy as np
import pytest
import sympy

from orbitkit.core.errors import DomainError
from orbitkit.jacobi import (
    JacobiDual,
    JacobiElement,
    JacobiLieElement,
    jacobi_bracket,
    jacobi_coadjoint,
    jacobi_embed,
    jacobi_mul,
    jacobi_pairing,
    orbit_dimension,
    project_jacobi_dual,
)
from orbitkit.jacobi.algebra import jacobi_lie_basis, jacobi_pairing_matrix
from orbitkit.jacobi.orbits import OrbitCoordinates, from_orbit_coordinates
from orbitkit.linalg.kinds import exact
from orbitkit.sampling import random_heis_exact, random_symplectic_exact
from orbitkit.symplectic import is_in_sp, sp_basis

DIMS = [(1, 1), (2, 1), (1, 2), (2, 2)]


@pytest.fixture
def lie_factory(rng: np.random.Generator, rational_matrix):
    """Random exact elements of 𝔤^J."""

    def _create(n: int, m: int) -> JacobiLieElement:
        weights = rng.integers(-3, 4, size=n * (2 * n + 1))
        X = sum((int(w) * B for w, B in zip(weights, sp_basis(n))), sympy.zeros(2 * n, 2 * n))
        return JacobiLieElement.of(
            X, rational_matrix(m, n), rational_matrix(m, n), rational_matrix(m, m, symmetric=True)
        )

    return _create


@pytest.fixture
def dual_factory(rational_matrix):
    """Random exact elements of (𝔤^J)*."""

    def _create(n: int, m: int) -> JacobiDual:
        return JacobiDual.of(
            rational_matrix(n, n),
            rational_matrix(n, m),
            rational_matrix(n, n, symmetric=True),
            rational_matrix(n, n, symmetric=True),
            rational_matrix(n, m),
            rational_matrix(m, m, symmetric=True),
        )

    return _create


@pytest.fixture
def exact_jacobi(rng: np.random.Generator):
    def _create(n: int, m: int) -> JacobiElement:
        return JacobiElement(random_symplectic_exact(rng, n), random_heis_exact(rng, n, m))

    return _create


class TestJacobiLieAlgebra:
    """Elements, the bracket and the matrix realization."""

    @pytest.mark.parametrize("n,m", DIMS)
    def test_realization_is_symplectic(self, lie_factory, n: int, m: int) -> None:
        """The block matrix of L lies in sp(n+m, R)."""
        assert is_in_sp(lie_factory(n, m).matrix())

    @pytest.mark.parametrize("n,m", DIMS)
    def test_bracket_matches_commutator(self, lie_factory, n: int, m: int) -> None:
        """[L₁, L₂] is the commutator of the block matrices."""
        L1, L2 = lie_factory(n, m), lie_factory(n, m)
        A, B = L1.matrix(), L2.matrix()
        assert jacobi_bracket(L1, L2).matrix() == A @ B - B @ A

    @pytest.mark.parametrize("n,m", DIMS)
    def test_from_matrix_roundtrip(self, lie_factory, n: int, m: int) -> None:
        """Reading the blocks back recovers (X, P, Q, R)."""
        L = lie_factory(n, m)
        back = JacobiLieElement.from_matrix(L.matrix(), n, m)
        assert (back.X, back.P, back.Q, back.R) == (L.X, L.P, L.Q, L.R)

    def test_basis_size(self) -> None:
        """dim 𝔤^J = n(2n+1) + 2mn + m(m+1)/2."""
        for n, m in DIMS:
            assert len(jacobi_lie_basis(n, m)) == n * (2 * n + 1) + 2 * m * n + m * (m + 1) // 2

    def test_rejects_x_outside_sp(self) -> None:
        """X must satisfy ^tX J + J X = 0."""
        with pytest.raises(DomainError, match="sp"):
            JacobiLieElement.of(sympy.eye(2), exact([[0]]), exact([[0]]), exact([[0]]))

    def test_dual_rejects_non_symmetric_blocks(self) -> None:
        """y, z and r must be symmetric."""
        zero = exact([[0, 0], [0, 0]])
        with pytest.raises(DomainError, match="y is not symmetric"):
            JacobiDual.of(
                zero,
                exact([[0], [0]]),
                exact([[0, 1], [0, 0]]),
                zero,
                exact([[0], [0]]),
                exact([[1]]),
            )


class TestPairingAndCoadjoint:
    """⟨F, L⟩ and Ad*."""

    @pytest.mark.parametrize("n,m", DIMS)
    def test_pairing_matches_trace(self, dual_factory, lie_factory, n: int, m: int) -> None:
        """The closed form equals tr(F·L)."""
        F, L = dual_factory(n, m), lie_factory(n, m)
        assert sympy.expand(jacobi_pairing(F, L) - jacobi_pairing_matrix(F, L)) == 0

    @pytest.mark.parametrize("n,m", DIMS)
    def test_projection_fixes_duals(self, dual_factory, n: int, m: int) -> None:
        """Projecting the matrix of F gives F back."""
        F = dual_factory(n, m)
        assert project_jacobi_dual(F.matrix(), n, m).equals(F)

    @pytest.mark.parametrize("n,m", [(1, 1), (2, 1)])
    def test_coadjoint_is_an_action(self, exact_jacobi, dual_factory, n: int, m: int) -> None:
        """Ad*(g₁g₂)F = Ad*(g₁)Ad*(g₂)F."""
        g1, g2, F = exact_jacobi(n, m), exact_jacobi(n, m), dual_factory(n, m)
        left = jacobi_coadjoint(jacobi_mul(g1, g2), F)
        assert left.equals(jacobi_coadjoint(g1, jacobi_coadjoint(g2, F)))

    @pytest.mark.parametrize("n,m", [(1, 1), (2, 1), (1, 2)])
    def test_pairing_is_invariant(self, exact_jacobi, dual_factory, lie_factory, n, m) -> None:
        """⟨Ad*(g)F, Ad(g)L⟩ = ⟨F, L⟩."""
        g, F, L = exact_jacobi(n, m), dual_factory(n, m), lie_factory(n, m)
        E = jacobi_embed(g).M
        moved_L = JacobiLieElement.from_matrix(E @ L.matrix() @ E.inv(), n, m)
        moved = jacobi_pairing(jacobi_coadjoint(g, F), moved_L)
        assert sympy.expand(moved - jacobi_pairing(F, L)) == 0

    def test_float_coadjoint(self, jacobi_factory, dual_factory) -> None:
        """Float elements act on exact duals in floats."""
        moved = jacobi_coadjoint(jacobi_factory(1, 1), dual_factory(1, 1))
        assert not moved.exact


class TestOrbitDimension:
    """Rank of the tangent map L ↦ ([L, F])_*."""

    def test_zero_functional(self) -> None:
        """The zero functional is a fixed point."""
        assert orbit_dimension(JacobiDual.zero(2, 1)) == 0

    def test_pure_central_functional(self) -> None:
        """F with only r ≠ 0 has an orbit of dimension 2mn."""
        for n, m in DIMS:
            zero = JacobiDual.zero(n, m)
            F = JacobiDual(zero.x, zero.p, zero.y, zero.z, zero.q, sympy.eye(m))
            assert orbit_dimension(F) == 2 * m * n

    @pytest.mark.parametrize(
        "coords,dimension",
        [((1, 0, 0, 0, 0, 1), 4), ((0, 0, 1, 0, 0, 0), 2), ((0, 0, 0, 1, 0, 0), 4)],
    )
    def test_n1_m1_orbits(self, coords, dimension: int) -> None:
        """n = m = 1: the mR+aX and P orbits are 4-dimensional, the Z orbit is 2-dimensional."""
        F = from_orbit_coordinates(OrbitCoordinates(*coords))
        assert orbit_dimension(F) == dimension
        assert orbit_dimension(F.as_float(), 1e-9) == dimension
