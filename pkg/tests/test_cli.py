"""Tests for the command-line entry point, run in-process."""

import io
import json
from pathlib import Path

import pytest

from orbitkit.main import main

COADJOINT = {
    "x": {"lam": [[2]], "mu": [[3]], "kappa": [[0]]},
    "F": {"a": [[0]], "b": [[0]], "c": [[1]]},
}
LATTICE = {"spec": {"S": [[2, 0], [0, 2]], "c": [[1], [1]]}}


def run(capsys: pytest.CaptureFixture[str], *argv: str) -> tuple[int, dict]:
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


class TestReports:
    """Test successful verbs and the report envelope."""

    def test_heis_coadjoint_exact(self, capsys: pytest.CaptureFixture[str]) -> None:
        """The worked coadjoint example comes back exactly."""
        code, report = run(capsys, "heis", "coadjoint", "--exact", "--json", json.dumps(COADJOINT))
        assert code == 0
        assert report["op"] == "heis coadjoint"
        assert report["result"] == {"a": [["3"]], "b": [["-2"]], "c": [["1"]]}
        assert report["residual"] == 0.0
        assert report["pass"] is True

    def test_envelope_keys(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Reports carry op, inputs, result, residual, tolerance and pass."""
        matrix = '{"A": [[0, 1], [-1, 0]]}'
        _, report = run(capsys, "linalg", "pfaffian", "--exact", "--json", matrix)
        assert list(report) == ["op", "inputs", "result", "residual", "tolerance", "pass"]
        assert report["result"] == "1"
        assert report["inputs"] == {"A": [[0, 1], [-1, 0]]}

    def test_options_override_json(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Command-line options win over the JSON payload."""
        payload = json.dumps({**LATTICE, "T": 1, "R": 0})
        code, report = run(capsys, "theta", "count", "--json", payload, "--R", "2")
        assert code == 0
        assert report["result"] == {"count": 2}

    def test_input_file(self, capsys: pytest.CaptureFixture[str], tmp_path: Path) -> None:
        """--input reads the request from a file."""
        path = tmp_path / "request.json"
        path.write_text(json.dumps({**LATTICE, "T": 0, "R": 0}), encoding="utf-8")
        code, report = run(capsys, "theta", "count", "--input", str(path))
        assert code == 0
        assert report["result"] == {"count": 1}

    def test_input_stdin(
        self, capsys: pytest.CaptureFixture[str], monkeypatch: pytest.MonkeyPatch
    ) -> None:
        """--input - reads the request from stdin."""
        monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(COADJOINT)))
        code, report = run(capsys, "heis", "coadjoint", "--exact", "--input", "-")
        assert code == 0
        assert report["result"]["b"] == [["-2"]]

    def test_settings_passed_to_theta(
        self,
        capsys: pytest.CaptureFixture[str],
        monkeypatch: pytest.MonkeyPatch,
        clear_settings,
    ) -> None:
        """The configured theta radius reaches the library through the verb."""
        monkeypatch.setenv("ORBITKIT_THETA_RADIUS", "2")
        payload = {**LATTICE, "point": {"Z": [[{"re": 0, "im": 1}]], "W": [[0]]}}
        code, report = run(capsys, "theta", "eval", "--json", json.dumps(payload))
        assert code == 0
        assert report["result"]["radius"] == 2

    def test_table_verify(self, capsys: pytest.CaptureFixture[str]) -> None:
        """The corrected commutation table verifies for n = m = 1."""
        code, report = run(capsys, "jacobi", "table", "--n", "1", "--m", "1", "--verify")
        assert code == 0
        assert report["pass"] is True
        assert all(identity["pass"] for identity in report["result"]["identities"])

    def test_failed_check_still_exits_zero(self, capsys: pytest.CaptureFixture[str]) -> None:
        """A verification that fails is reported with pass false, not an error status."""
        code, report = run(
            capsys, "jacobi", "table", "--n", "1", "--m", "1", "--verify", "--printed"
        )
        assert code == 0
        assert report["pass"] is False

    def test_z_axis_point_is_not_a_member(self, capsys: pytest.CaptureFixture[str]) -> None:
        """The Z generator is boundary-degenerate for the Z family and fails the check."""
        payload = {
            "F": {"x": [[0]], "p": [[0]], "y": [[0]], "z": [[1]], "q": [[0]], "r": [[0]]},
            "family": "Z",
        }
        code, report = run(capsys, "orbit", "check", "--exact", "--json", json.dumps(payload))
        assert code == 0
        assert report["residual"] == 0.0
        assert report["result"]["boundary_degenerate"] is True
        assert report["result"]["member"] is False
        assert report["pass"] is False

    def test_killing(self, capsys: pytest.CaptureFixture[str]) -> None:
        """The Killing form coefficient for n = 2 is 6."""
        code, report = run(capsys, "jacobi", "killing", "--n", "2")
        assert code == 0
        assert report["result"]["coefficient"] == 6
        assert report["pass"] is True


class TestErrors:
    """Test error envelopes and exit statuses."""

    def test_domain_error(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Mismatched dimensions exit with status 2."""
        payload = {
            "x": {"lam": [[1]], "mu": [[0]], "kappa": [[0]]},
            "y": {"lam": [[1, 0]], "mu": [[0, 0]], "kappa": [[0]]},
        }
        code, report = run(capsys, "heis", "mul", "--json", json.dumps(payload))
        assert code == 2
        assert report["error"]["kind"] == "domain"

    def test_malformed_json(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Malformed JSON exits with status 3."""
        code, report = run(capsys, "heis", "mul", "--json", "{not json")
        assert code == 3
        assert report["error"]["kind"] == "parse"
        assert report["error"]["detail"]["reason"] == "malformed JSON"

    def test_schema_violation(self, capsys: pytest.CaptureFixture[str]) -> None:
        """A request failing schema validation exits with status 3."""
        code, report = run(capsys, "jacobi", "killing", "--n", "4")
        assert code == 3
        assert report["error"]["detail"]["reason"] == "schema validation failed"

    def test_missing_input_file(self, capsys: pytest.CaptureFixture[str], tmp_path: Path) -> None:
        """An unreadable --input file exits with status 3."""
        code, report = run(capsys, "theta", "count", "--input", str(tmp_path / "missing.json"))
        assert code == 3
        assert report["error"]["detail"]["reason"] == "cannot read input"

    def test_unknown_verb(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Unknown verbs exit with status 64 and print usage to stderr."""
        code = main(["heis", "frobnicate"])
        captured = capsys.readouterr()
        assert code == 64
        assert json.loads(captured.out)["error"]["kind"] == "usage"
        assert "usage:" in captured.err

    @pytest.mark.parametrize("tol", ["0", "-0.001"])
    def test_bad_tolerance(self, capsys: pytest.CaptureFixture[str], tol: str) -> None:
        """Non-positive --tol exits with status 64."""
        code, report = run(capsys, "jacobi", "killing", "--tol", tol)
        assert code == 64
        assert report["error"]["kind"] == "usage"

    def test_non_numeric_option(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Options that fail type conversion are usage errors."""
        code = main(["jacobi", "killing", "--n", "two"])
        capsys.readouterr()
        assert code == 64


class TestMeta:
    """Test --version and --help."""

    def test_version(self, capsys: pytest.CaptureFixture[str]) -> None:
        """--version prints the version and exits 0."""
        assert main(["--version"]) == 0
        assert "0.1.0" in capsys.readouterr().out

    def test_help(self, capsys: pytest.CaptureFixture[str]) -> None:
        """--help lists the verb groups."""
        assert main(["--help"]) == 0
        out = capsys.readouterr().out
        for group in ("linalg", "sp", "heis", "rep", "sl2", "jacobi", "orbit", "theta"):
            assert group in out
