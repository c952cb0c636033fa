"""Tests for sl(2)-triples, the Cayley transform, Jacobson–Morozov and the Sekiguchi image."""

from __future__ import annotations

import numpy as np
import pytest
import sympy

from orbitkit.core.errors import DomainError
from orbitkit.linalg.kinds import unit
from orbitkit.sl2 import (
    Ambient,
    AmbientKind,
    Sl2Triple,
    cayley_transform,
    check_relations,
    is_cayley,
    is_nilpotent,
    is_normal,
    is_triple,
    jacobson_morozov,
    kostant_h,
    morphism_class,
    normal_basis,
    sekiguchi_image,
    standard_basis,
)

I = sympy.I


class TestBases:
    """The standard and normal bases of sl(2, C)."""

    def test_standard_basis(self) -> None:
        """(H₀, E₀, F₀) is a Cayley triple and not a normal one."""
        s = standard_basis()
        assert is_triple(s)
        assert is_cayley(s)
        assert not is_normal(s)
        assert all(value == 0.0 for value in check_relations(s).values())

    def test_normal_basis(self) -> None:
        """(h₀, x₀, y₀) is a normal triple."""
        t = normal_basis()
        assert is_triple(t)
        assert is_normal(t)

    def test_float_triple(self) -> None:
        """Float carriers are compared with a tolerance."""
        s = standard_basis()
        t = Sl2Triple(*(np.array(M, dtype=float) for M in (s.H, s.X, s.Y)))
        assert is_triple(t, 1e-12)

    def test_broken_relation(self) -> None:
        """Scaling X breaks [X, Y] = H."""
        s = standard_basis()
        t = Sl2Triple(s.H, 2 * s.X, s.Y)
        assert not is_triple(t)
        assert check_relations(t)["[X,Y]=H"] > 0


class TestCayleyTransform:
    """Cayley triples to normal triples."""

    def test_standard_to_normal(self) -> None:
        """The transform of the standard basis has h = [[0, i], [−i, 0]] and is normal."""
        image = cayley_transform(standard_basis())
        assert image.H == sympy.Matrix([[0, I], [-I, 0]])
        assert is_triple(image)
        assert is_normal(image)

    def test_rejects_non_cayley(self) -> None:
        """(H₀, 2E₀, F₀/2) is a triple but θ(X) ≠ −Y."""
        s = standard_basis()
        t = Sl2Triple(s.H, 2 * s.X, s.Y / 2)
        assert is_triple(t)
        with pytest.raises(DomainError):
            cayley_transform(t)


class TestJacobsonMorozov:
    """Completion of a nilpotent to a standard triple."""

    @pytest.mark.parametrize(
        "E,ambient",
        [
            (unit(2, 2, 0, 1), Ambient(AmbientKind.SL, 2)),
            (unit(3, 3, 0, 1) + unit(3, 3, 1, 2), Ambient(AmbientKind.SL, 3)),
            (unit(3, 3, 0, 2), Ambient(AmbientKind.SL, 3)),
            (unit(4, 4, 0, 2), Ambient(AmbientKind.SP, 2)),
            (unit(4, 4, 0, 3) + unit(4, 4, 1, 2), Ambient(AmbientKind.SP, 2)),
        ],
    )
    def test_completion(self, E: sympy.Matrix, ambient: Ambient) -> None:
        """The completed triple satisfies the bracket relations and keeps E."""
        t = jacobson_morozov(E, ambient)
        assert t.X == E
        assert is_triple(t)
        assert ambient.contains(t.H)
        assert ambient.contains(t.Y)

    def test_regular_nilpotent_eigenvalues(self) -> None:
        """For a regular nilpotent of sl(3), H has eigenvalues 2, 0, −2."""
        t = jacobson_morozov(unit(3, 3, 0, 1) + unit(3, 3, 1, 2), Ambient(AmbientKind.SL, 3))
        assert t.H.eigenvals() == {2: 1, 0: 1, -2: 1}

    def test_rejects_zero(self) -> None:
        """E = 0 has no completion."""
        with pytest.raises(DomainError, match="nonzero"):
            jacobson_morozov(sympy.zeros(2, 2), Ambient(AmbientKind.SL, 2))

    def test_rejects_non_nilpotent(self) -> None:
        """Semisimple input is refused."""
        with pytest.raises(DomainError, match="nilpotent"):
            jacobson_morozov(sympy.Matrix([[1, 0], [0, -1]]), Ambient(AmbientKind.SL, 2))

    def test_rejects_outside_ambient(self) -> None:
        """A nilpotent of sl(4) that is not in sp(4) is refused."""
        with pytest.raises(DomainError, match="not in sp"):
            jacobson_morozov(unit(4, 4, 0, 1), Ambient(AmbientKind.SP, 2))


class TestSekiguchi:
    """x = ½(H − i(X + Y)) and the Kostant element."""

    def test_standard_basis_maps_to_x0(self) -> None:
        """The standard basis is sent to x₀."""
        assert sekiguchi_image(standard_basis()) == normal_basis().X

    def test_kostant_h(self) -> None:
        """φ(h₀) = i(E₀ − F₀) = h₀ for the standard basis."""
        assert kostant_h(standard_basis()) == normal_basis().H

    def test_image_is_nilpotent(self) -> None:
        """The Sekiguchi image of a completed triple is nilpotent."""
        t = jacobson_morozov(unit(4, 4, 0, 2), Ambient(AmbientKind.SP, 2))
        assert is_nilpotent(sekiguchi_image(t))
        assert not is_nilpotent(t.H)

    def test_rejects_invalid_triple(self) -> None:
        """Only genuine triples have an image."""
        s = standard_basis()
        with pytest.raises(DomainError):
            sekiguchi_image(Sl2Triple(s.H, 2 * s.X, s.Y))

    def test_morphism_flags(self) -> None:
        """The standard basis is real and θ-equivariant; the normal basis is not real."""
        flags = morphism_class(standard_basis())
        assert flags.real and flags.theta
        assert not morphism_class(normal_basis()).real
