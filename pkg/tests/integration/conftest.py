"""Integration test fixtures: the real entry point in a subprocess."""

from __future__ import annotations

import json
import os
import subprocess
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any

import pytest

_SRC = Path(__file__).resolve().parents[2] / "src"


@dataclass(frozen=True)
class CliResult:
    """Exit status and captured streams of one invocation."""

    returncode: int
    stdout: str
    stderr: str

    def json(self) -> dict[str, Any]:
        return json.loads(self.stdout)


@pytest.fixture(scope="session")
def cli_env() -> dict[str, str]:
    """Environment for the subprocess with ``src`` on the path and settings pinned."""
    env = {k: v for k, v in os.environ.items() if not k.startswith("ORBITKIT_")}
    env["PYTHONPATH"] = os.pathsep.join(filter(None, [str(_SRC), env.get("PYTHONPATH")]))
    env["ORBITKIT_LOG_LEVEL"] = "WARNING"
    return env


@pytest.fixture
def orbitkit(cli_env: dict[str, str]):
    """Run ``python -m orbitkit`` with the given arguments.

    Usage:
        def test_something(orbitkit):
            result = orbitkit("heis", "mul", "--json", "{...}")
    """

    def _run(*argv: str, stdin: str | None = None, env: dict[str, str] | None = None) -> CliResult:
        completed = subprocess.run(
            [sys.executable, "-m", "orbitkit", *argv],
            input=stdin,
            capture_output=True,
            text=True,
            env={**cli_env, **(env or {})},
            timeout=300,
        )
        return CliResult(completed.returncode, completed.stdout, completed.stderr)

    return _run
