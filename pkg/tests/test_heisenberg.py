"""Tests for the Heisenberg group, its Lie algebra, the coadjoint action and B_F."""

from __future__ import annotations

import pytest
import sympy

from orbitkit.core.errors import DomainError
from orbitkit.heisenberg import (
    DualOrbitKind,
    HeisDual,
    HeisElement,
    HeisLieElement,
    classify_dual_orbit,
    diamond_mul,
    from_bracket,
    heis_bform,
    heis_bracket,
    heis_coadjoint,
    heis_embed,
    heis_exp,
    heis_inv,
    heis_mul,
    heis_pairing,
    heis_polarization_check,
    heis_radical,
    mackey_split,
    plancherel_density,
)
from orbitkit.heisenberg.algebra import (
    cyclic_sum,
    heis_coadjoint_matrix,
    heis_orbit_rank,
    heis_pairing_matrix,
    lie_basis,
)
from orbitkit.heisenberg.group import to_bracket
from orbitkit.linalg.kinds import exact
from orbitkit.symplectic import is_symplectic

DIMS = [(1, 1), (2, 1), (1, 2), (2, 2)]


@pytest.fixture
def dual_factory(rational_matrix):
    """Random exact F(a, b, c)."""

    def _create(g: int, h: int) -> HeisDual:
        return HeisDual.of(
            rational_matrix(h, g), rational_matrix(h, g), rational_matrix(h, h, symmetric=True)
        )

    return _create


@pytest.fixture
def lie_factory(rational_matrix):
    """Random exact X(α, β, γ)."""

    def _create(g: int, h: int) -> HeisLieElement:
        return HeisLieElement.of(
            rational_matrix(h, g), rational_matrix(h, g), rational_matrix(h, h, symmetric=True)
        )

    return _create


class TestHeisGroup:
    """The group law in ∘-coordinates."""

    @pytest.mark.parametrize("g,h", DIMS)
    def test_inverse(self, heis_factory, g: int, h: int) -> None:
        """x ∘ x⁻¹ = e exactly."""
        x = heis_factory(g, h)
        assert heis_mul(x, heis_inv(x)).equals(HeisElement.identity(g, h))
        assert heis_mul(heis_inv(x), x).equals(HeisElement.identity(g, h))

    @pytest.mark.parametrize("g,h", DIMS)
    def test_associative(self, heis_factory, g: int, h: int) -> None:
        """(x ∘ y) ∘ z = x ∘ (y ∘ z)."""
        x, y, z = heis_factory(g, h), heis_factory(g, h), heis_factory(g, h)
        assert heis_mul(heis_mul(x, y), z).equals(heis_mul(x, heis_mul(y, z)))

    def test_rejects_non_symmetric_core(self) -> None:
        """κ + µ^tλ must be symmetric."""
        with pytest.raises(DomainError, match="not symmetric"):
            HeisElement.of(exact([[1], [0]]), exact([[0], [1]]), exact([[0, 0], [0, 0]]))

    def test_rejects_mixed_dimensions(self, heis_factory) -> None:
        """Elements of different groups do not multiply."""
        with pytest.raises(DomainError):
            heis_mul(heis_factory(1, 1), heis_factory(2, 1))

    @pytest.mark.parametrize("g,h", DIMS)
    def test_bracket_coordinates_match_diamond_law(self, heis_factory, g: int, h: int) -> None:
        """The ⋄-law is the ∘-law read in bracket coordinates."""
        x, y = heis_factory(g, h), heis_factory(g, h)
        left = to_bracket(heis_mul(x, y))
        right = diamond_mul(to_bracket(x), to_bracket(y))
        assert all(a == b for a, b in zip(left, right))
        assert from_bracket(*to_bracket(x)).equals(x)


class TestHeisEmbedding:
    """H^{(g,h)} inside Sp(g+h, R)."""

    @pytest.mark.parametrize("g,h", DIMS)
    def test_image_is_symplectic(self, heis_factory, g: int, h: int) -> None:
        """Every embedded element satisfies ^tM J M = J."""
        assert is_symplectic(heis_embed(heis_factory(g, h)).M)

    @pytest.mark.parametrize("g,h", DIMS)
    def test_homomorphism(self, heis_factory, g: int, h: int) -> None:
        """embed(x ∘ y) = embed(x)·embed(y)."""
        x, y = heis_factory(g, h), heis_factory(g, h)
        assert heis_embed(heis_mul(x, y)).M == heis_embed(x).M @ heis_embed(y).M

    @pytest.mark.parametrize("g,h", DIMS)
    def test_exp_matches_matrix_exponential(self, lie_factory, g: int, h: int) -> None:
        """exp X is the truncated series I + X + X²/2 of the nilpotent block matrix."""
        X = lie_factory(g, h)
        Xm = X.matrix()
        assert Xm @ Xm @ Xm == sympy.zeros(*Xm.shape)
        series = sympy.eye(Xm.shape[0]) + Xm + Xm @ Xm / 2
        assert heis_embed(heis_exp(X)).M == series


class TestHeisAlgebra:
    """Pairing, bracket and the coadjoint action."""

    def test_coadjoint_worked_example(self) -> None:
        """Ad*((2,3,0))F(0,0,1) = F(3,−2,1)."""
        x = HeisElement.of(exact([[2]]), exact([[3]]), exact([[0]]))
        F = HeisDual.of(exact([[0]]), exact([[0]]), exact([[1]]))
        moved = heis_coadjoint(x, F)
        assert (moved.a, moved.b, moved.c) == (exact([[3]]), exact([[-2]]), exact([[1]]))

    @pytest.mark.parametrize("g,h", DIMS)
    def test_coadjoint_matches_conjugation(self, heis_factory, dual_factory, g, h) -> None:
        """The closed form equals conjugate-and-project on the block matrices."""
        x, F = heis_factory(g, h), dual_factory(g, h)
        assert heis_coadjoint(x, F).equals(heis_coadjoint_matrix(x, F))

    @pytest.mark.parametrize("g,h", DIMS)
    def test_coadjoint_is_an_action(self, heis_factory, dual_factory, g, h) -> None:
        """Ad*(x ∘ y) = Ad*(x) Ad*(y)."""
        x, y, F = heis_factory(g, h), heis_factory(g, h), dual_factory(g, h)
        left = heis_coadjoint(heis_mul(x, y), F)
        assert left.equals(heis_coadjoint(x, heis_coadjoint(y, F)))

    @pytest.mark.parametrize("g,h", DIMS)
    def test_pairing_matches_trace(self, dual_factory, lie_factory, g, h) -> None:
        """⟨F, X⟩ = σ(F X) on the block realizations."""
        F, X = dual_factory(g, h), lie_factory(g, h)
        assert heis_pairing(F, X) == heis_pairing_matrix(F, X)

    @pytest.mark.parametrize("g,h", DIMS)
    def test_bracket_matches_commutator(self, lie_factory, g, h) -> None:
        """[X, Y] is the matrix commutator."""
        X, Y = lie_factory(g, h), lie_factory(g, h)
        Xm, Ym = X.matrix(), Y.matrix()
        assert heis_bracket(X, Y).matrix() == Xm @ Ym - Ym @ Xm

    @pytest.mark.parametrize("g,h", DIMS)
    def test_bform_is_closed(self, dual_factory, lie_factory, g, h) -> None:
        """The cyclic sum of ⟨F, [[·,·],·]⟩ vanishes."""
        F = dual_factory(g, h)
        assert cyclic_sum(F, lie_factory(g, h), lie_factory(g, h), lie_factory(g, h)) == 0

    def test_bform_is_alternating(self, dual_factory, lie_factory) -> None:
        """B_F(X, Y) = −B_F(Y, X)."""
        F, X, Y = dual_factory(2, 2), lie_factory(2, 2), lie_factory(2, 2)
        assert heis_bform(F, X, Y) == -heis_bform(F, Y, X)

    def test_dimension_mismatch(self, dual_factory, lie_factory) -> None:
        """Pairing across different (g, h) is a domain error."""
        with pytest.raises(DomainError):
            heis_pairing(dual_factory(1, 1), lie_factory(2, 1))


class TestRadical:
    """rad B_F and the orbit rank."""

    def test_generic_orbit(self) -> None:
        """c ≠ 0 on H^{(1,1)}: the radical is the center and orbits are planes."""
        F = HeisDual.of(exact([[0]]), exact([[0]]), exact([[1]]))
        assert len(heis_radical(F)) == 1
        assert heis_orbit_rank(F) == 2

    def test_degenerate_orbit(self) -> None:
        """c = 0: B_F vanishes and orbits are points."""
        F = HeisDual.of(exact([[1]]), exact([[2]]), exact([[0]]))
        assert len(heis_radical(F)) == 3
        assert heis_orbit_rank(F) == 0

    def test_rank_one_center(self) -> None:
        """h = 2, g = 1, rank c = 1: dim rad = 3 + 2 and the orbit rank is 2."""
        F = HeisDual.of(exact([[0], [0]]), exact([[0], [0]]), exact([[1, 0], [0, 0]]))
        assert len(heis_radical(F)) == 5
        assert heis_orbit_rank(F) == 2

    @pytest.mark.parametrize("g,h", DIMS)
    def test_radical_is_radical(self, dual_factory, g, h) -> None:
        """Every radical vector pairs to zero against the whole basis."""
        F = dual_factory(g, h)
        basis = lie_basis(g, h)
        for X in heis_radical(F):
            assert all(heis_bform(F, X, Y) == 0 for Y in basis)

    def test_float_radical(self) -> None:
        """Float input follows the same count with a tolerance."""
        F = HeisDual.of(exact([[0]]), exact([[0]]), exact([[1]]))
        F_float = HeisDual(*(sympy.matrix2numpy(M, dtype=float) for M in (F.a, F.b, F.c)))
        assert len(heis_radical(F_float, 1e-10)) == 1


class TestPolarizationAndPlancherel:
    """The standard polarization and the Pfaffian density."""

    @pytest.mark.parametrize("c,g", [([[1]], 1), ([[2, 1], [1, 3]], 1), ([[1]], 2)])
    def test_standard_polarization(self, c, g) -> None:
        """{X(0, β, γ)} is isotropic and maximal, and every α-direction breaks it."""
        report = heis_polarization_check(exact(c), g)
        assert report.isotropic
        assert report.maximal
        assert report.ok

    def test_polarization_needs_nondegenerate_c(self) -> None:
        """A singular c is rejected."""
        with pytest.raises(DomainError, match="nondegenerate"):
            heis_polarization_check(exact([[1, 0], [0, 0]]), 1)

    @pytest.mark.parametrize("c,density", [(1, 2), (3, 6), (-2, -4)])
    def test_plancherel_density(self, c: int, density: int) -> None:
        """On H^{(1,1)} the density is Pf [[0, 2c], [−2c, 0]] = 2c."""
        F = HeisDual.of(exact([[0]]), exact([[0]]), exact([[c]]))
        assert plancherel_density(F) == density

    def test_plancherel_needs_nondegenerate_c(self) -> None:
        """c = 0 has no density."""
        F = HeisDual.of(exact([[0]]), exact([[0]]), exact([[0]]))
        with pytest.raises(DomainError):
            plancherel_density(F)


class TestMackeyAndDualOrbits:
    """x = k ∘ s and the S-orbits on K̂."""

    @pytest.mark.parametrize("g,h", DIMS)
    def test_mackey_split(self, heis_factory, g, h) -> None:
        """k ∈ K, s ∈ S and k ∘ s = x."""
        x = heis_factory(g, h)
        k_part, s_part = mackey_split(x)
        assert k_part.lam == sympy.zeros(h, g)
        assert s_part.mu == sympy.zeros(h, g)
        assert s_part.kappa == sympy.zeros(h, h)
        assert heis_mul(k_part, s_part).equals(x)

    @pytest.mark.parametrize(
        "kappa_hat,kind,stabilizer",
        [
            ([[0, 0], [0, 0]], DualOrbitKind.TYPE_III, 4),
            ([[1, 0], [0, 2]], DualOrbitKind.TYPE_I, 0),
            ([[1, 1], [1, 1]], DualOrbitKind.TYPE_II, 2),
        ],
    )
    def test_classify(self, kappa_hat, kind, stabilizer) -> None:
        """Type and stabilizer dimension follow rank κ̂ for h = g = 2."""
        verdict = classify_dual_orbit(exact([[1, 0], [0, 1]]), exact(kappa_hat))
        assert verdict.kind is kind
        assert verdict.stabilizer_dim == stabilizer

    def test_classify_rejects_non_symmetric(self) -> None:
        """κ̂ must be symmetric."""
        with pytest.raises(DomainError):
            classify_dual_orbit(exact([[0], [0]]), exact([[0, 1], [0, 0]]))
