from __future__ import annotations

import json
import logging
import sys
from typing import Sequence

from pydantic import ValidationError

from orbitkit.app import create_app
from orbitkit.cli.generic import CommandContext
from orbitkit.core.config import get_settings
from orbitkit.core.errors import OrbitkitError, UsageError
from orbitkit.core.logging import configure_logging
from orbitkit.schemas.generic import ErrorDetail, ErrorReport
from orbitkit.schemas.matrix import encode

logger = logging.getLogger(__name__)


def _emit(document: dict) -> None:
    sys.stdout.write(json.dumps(document) + "\n")
    sys.stdout.flush()


def _fail(error: OrbitkitError) -> int:
    if isinstance(error, UsageError) and isinstance(error.detail, dict):
        sys.stderr.write(f"{error.detail.get('usage', '')}\n")
    detail = ErrorDetail(kind=error.kind, detail=encode(error.detail))
    _emit(ErrorReport(error=detail).model_dump())
    return error.exit_code


def main(argv: Sequence[str] | None = None) -> int:
    """Parse ``argv``, run one verb and write its JSON report to stdout; return the exit status."""
    try:
        namespace = vars(create_app().parse_args(argv))
    except OrbitkitError as error:
        return _fail(error)
    except ValidationError as error:
        return _fail(UsageError({"reason": "invalid settings", "error": str(error)}))
    except SystemExit as exit_:
        # --help and --version
        return int(exit_.code or 0)

    try:
        settings = get_settings().with_overrides(tol=namespace["tol"], exact=namespace["exact"])
    except (ValueError, ValidationError) as error:
        return _fail(UsageError({"reason": "invalid settings", "error": str(error)}))
    configure_logging(namespace["log_level"] or settings.log_level)

    command = namespace["command"]
    try:
        report = command.run(namespace, CommandContext(settings))
    except OrbitkitError as error:
        logger.debug("%s failed: %s", command.name, error)
        return _fail(error)
    _emit(encode(report.model_dump(by_alias=True)))
    return 0


if __name__ == "__main__":
    sys.exit(main())
