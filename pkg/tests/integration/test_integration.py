"""Integration tests: real command lines against the installed entry point."""

from __future__ import annotations

import json

import pytest

pytestmark = pytest.mark.integration

LATTICE = {"S": [[2, 0], [0, 2]], "c": [[1], [1]]}
E8 = {
    "S": [
        [2, -1, 0, 0, 0, 0, 0, 0],
        [-1, 2, -1, 0, 0, 0, 0, 0],
        [0, -1, 2, -1, 0, 0, 0, 0],
        [0, 0, -1, 2, -1, 0, 0, 0],
        [0, 0, 0, -1, 2, -1, 0, -1],
        [0, 0, 0, 0, -1, 2, -1, 0],
        [0, 0, 0, 0, 0, -1, 2, 0],
        [0, 0, 0, 0, -1, 0, 0, 2],
    ],
    "c": [[1], [0], [0], [0], [0], [0], [0], [0]],
}


class TestEntryPoint:
    """Tests for process-level behavior."""

    def test_version(self, orbitkit) -> None:
        result = orbitkit("--version")

        assert result.returncode == 0
        assert result.stdout.strip() == "0.1.0"

    def test_usage_error_status(self, orbitkit) -> None:
        result = orbitkit("nonsense")

        assert result.returncode == 64
        assert result.json()["error"]["kind"] == "usage"

    def test_stdin_request(self, orbitkit) -> None:
        request = {
            "x": {"lam": [[2]], "mu": [[3]], "kappa": [[0]]},
            "F": {"a": [[0]], "b": [[0]], "c": [[1]]},
        }
        result = orbitkit("heis", "coadjoint", "--exact", "--input", "-", stdin=json.dumps(request))

        assert result.returncode == 0
        assert result.json()["result"] == {"a": [["3"]], "b": [["-2"]], "c": [["1"]]}

    def test_environment_tolerance(self, orbitkit) -> None:
        result = orbitkit(
            "jacobi", "killing", "--n", "1", env={"ORBITKIT_TOLERANCE": "1e-12"}
        )

        assert result.returncode == 0
        assert result.json()["pass"] is True

    def test_invalid_environment(self, orbitkit) -> None:
        result = orbitkit("jacobi", "killing", env={"ORBITKIT_TOLERANCE": "-1"})

        assert result.returncode == 64


class TestAcceptance:
    """End-to-end checks of the headline computations."""

    @pytest.mark.parametrize("n, m", [(1, 1), (2, 1), (1, 2)])
    def test_commutation_table(self, orbitkit, n: int, m: int) -> None:
        result = orbitkit("jacobi", "table", "--n", str(n), "--m", str(m), "--verify")

        assert result.returncode == 0
        assert result.json()["pass"] is True

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_killing_coefficient(self, orbitkit, n: int) -> None:
        result = orbitkit("jacobi", "killing", "--n", str(n))

        body = result.json()
        assert body["result"]["coefficient"] == 2 * (n + 1)
        assert body["pass"] is True

    def test_commutant_is_scalar(self, orbitkit) -> None:
        request = {"rep": {"N": 3, "g": 1, "h": 1, "c": [[1]]}}
        result = orbitkit("rep", "commutant", "--json", json.dumps(request))

        assert result.returncode == 0
        assert result.json()["result"]["dimension"] == 1

    def test_theta_fourier_matches_count(self, orbitkit) -> None:
        request = {"spec": LATTICE, "T": 1, "R": 2}
        result = orbitkit("theta", "fourier", "--json", json.dumps(request))

        body = result.json()
        assert body["result"]["lattice_count"] == 2
        assert body["pass"] is True

    @pytest.mark.parametrize("generator", ["translation", "lambda", "mu"])
    def test_theta_invariance(self, orbitkit, generator: str) -> None:
        request = {"spec": LATTICE}
        result = orbitkit(
            "theta", "invariance", "--generator", generator, "--json", json.dumps(request)
        )

        assert result.returncode == 0
        assert result.json()["pass"] is True

    @pytest.mark.slow
    def test_e8_inversion(self, orbitkit) -> None:
        request = {"spec": {**E8, "radius": 8}, "tolerance": 1e-6}
        generator = "inversion"
        result = orbitkit(
            "theta", "invariance", "--generator", generator, "--json", json.dumps(request)
        )

        assert result.returncode == 0
        assert result.json()["pass"] is True

    def test_minimal_orbit_dimension(self, orbitkit) -> None:
        request = {"delta": [[1]], "n": 2}
        result = orbitkit("orbit", "dimension", "--json", json.dumps(request))

        assert result.returncode == 0
        assert result.json()["result"]["dimension"] == 4
