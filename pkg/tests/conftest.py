"""Shared test fixtures."""

from __future__ import annotations

import numpy as np
import pytest
import sympy

from orbitkit.sampling import random_heis, random_heis_exact, random_symplectic


@pytest.fixture(scope="session", autouse=True)
def set_test_env(monkeypatch_session):
    """Pin the environment once for every test.

    Uses session scope so module imports see the same settings.
    """
    monkeypatch_session.setenv("ORBITKIT_LOG_LEVEL", "WARNING")
    monkeypatch_session.delenv("ORBITKIT_TOLERANCE", raising=False)
    monkeypatch_session.delenv("ORBITKIT_EXACT", raising=False)
    from orbitkit.core.config import get_settings

    get_settings.cache_clear()


@pytest.fixture(scope="session")
def monkeypatch_session():
    """Session-scoped monkeypatch for environment setup."""
    from _pytest.monkeypatch import MonkeyPatch

    mp = MonkeyPatch()
    yield mp
    mp.undo()


@pytest.fixture
def clear_settings():
    """Drop the cached settings before and after a test that changes the environment."""
    from orbitkit.core.config import get_settings

    get_settings.cache_clear()
    yield get_settings
    get_settings.cache_clear()


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


@pytest.fixture
def rational_matrix(rng: np.random.Generator):
    """Factory for random exact rational matrices.

    Usage:
        def test_something(rational_matrix):
            A = rational_matrix(3, 3, symmetric=True)
    """

    def _create(rows: int, cols: int, *, bound: int = 4, symmetric: bool = False) -> sympy.Matrix:
        num = rng.integers(-bound, bound + 1, size=(rows, cols))
        den = rng.integers(1, bound + 1, size=(rows, cols))
        A = sympy.Matrix(rows, cols, lambda i, j: sympy.Rational(int(num[i, j]), int(den[i, j])))
        return (A + A.T) / 2 if symmetric else A

    return _create


@pytest.fixture
def heis_factory(rng: np.random.Generator):
    """Factory for Heisenberg elements; exact by default."""

    def _create(g: int = 1, h: int = 1, *, exact_kind: bool = True):
        return random_heis_exact(rng, g, h) if exact_kind else random_heis(rng, g, h)

    return _create


@pytest.fixture
def jacobi_factory(rng: np.random.Generator):
    """Factory for float Jacobi group elements of moderate condition number."""
    from orbitkit.jacobi import JacobiElement

    def _create(n: int = 1, m: int = 1, *, spread: float = 0.6) -> JacobiElement:
        return JacobiElement(
            random_symplectic(rng, n, spread=spread), random_heis(rng, n, m, spread=spread)
        )

    return _create
