from __future__ import annotations

import argparse
import logging

from orbitkit.cli.router import router
from orbitkit.core.config import get_settings
from orbitkit.core.errors import UsageError

_LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class OrbitkitParser(argparse.ArgumentParser):
    """Argument errors raise UsageError instead of exiting."""

    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError({"reason": message, "usage": self.format_usage().strip()})


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=None, help="Float comparison tolerance")
    common.add_argument(
        "--exact",
        action="store_true",
        default=None,
        help="Read numbers as exact rationals where the verb supports it",
    )
    common.add_argument(
        "--log-level", type=str.upper, choices=_LOG_LEVELS, default=None, help="Log level"
    )
    common.add_argument("--input", default=None, help="JSON request file, or - for stdin")
    common.add_argument("--json", default=None, help="Inline JSON request")
    return common


def create_app() -> OrbitkitParser:
    settings = get_settings()
    parser = OrbitkitParser(
        prog=settings.app_name,
        description="Orbit-method computations with JSON input and output.",
    )
    parser.add_argument("--version", action="version", version=settings.app_version)
    groups = parser.add_subparsers(dest="group", metavar="GROUP")
    groups.required = True
    router.build(groups, [_common_options()])
    logging.getLogger(__name__).debug("registered verbs: %s", ", ".join(router.verbs()))
    return parser
