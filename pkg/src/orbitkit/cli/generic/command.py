"""Generic command factory for declarative verbs."""

from __future__ import annotations

import dataclasses
import json
import logging
import sys
from pathlib import Path
from typing import Any, Callable

from pydantic import BaseModel, ValidationError

from orbitkit.cli.generic.options import OptionField, apply_options
from orbitkit.core.config import Settings
from orbitkit.core.errors import ParseError
from orbitkit.schemas.generic import Report

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class CommandContext:
    settings: Settings

    @property
    def exact(self) -> bool:
        return self.settings.exact

    @property
    def tol(self) -> float:
        return self.settings.tolerance


Handler = Callable[[Any, CommandContext], Report]


@dataclasses.dataclass(frozen=True)
class Command:
    name: str
    handler: Handler
    request_schema: type[BaseModel] | None
    options: list[OptionField]
    help: str

    def run(self, namespace: dict[str, Any], ctx: CommandContext) -> Report:
        payload = apply_options(load_payload(namespace), self.options, namespace)
        if self.request_schema is None:
            return self.handler(None, ctx)
        try:
            request = self.request_schema.model_validate(payload)
        except ValidationError as exc:
            raise ParseError(
                {"reason": "schema validation failed", "errors": _validation_errors(exc)}
            ) from None
        logger.debug("running %s", self.name)
        return self.handler(request, ctx)


def create_command(
    *,
    name: str,
    handler: Handler,
    request_schema: type[BaseModel] | None = None,
    options: list[OptionField] | None = None,
    help: str = "",
) -> Command:
    """Create a verb from a request schema and a handler.

    Args:
        name: Verb name inside its group (e.g. "mul").
        handler: Callable taking the validated request and the context, returning a Report.
        request_schema: Pydantic model the merged payload is validated against.
        options: Declarative options merged over the JSON payload.
        help: One-line help text.

    Returns:
        A Command ready to be added to a CommandRouter.
    """
    return Command(name, handler, request_schema, list(options or []), help)


def _validation_errors(exc: ValidationError) -> list[dict[str, Any]]:
    return [
        {"loc": [str(part) for part in error["loc"]], "msg": error["msg"]}
        for error in exc.errors(include_url=False)
    ]


def _read_document(text: str, source: str) -> dict[str, Any]:
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(
            {"reason": "malformed JSON", "source": source, "error": str(exc)}
        ) from None
    if not isinstance(document, dict):
        raise ParseError({"reason": "JSON input must be an object", "source": source})
    return document


def load_payload(namespace: dict[str, Any]) -> dict[str, Any]:
    """``--input`` (a path, or ``-`` for stdin) first, then ``--json`` on top."""
    payload: dict[str, Any] = {}
    source = namespace.get("input")
    if source is not None:
        if source == "-":
            text = sys.stdin.read()
        else:
            try:
                text = Path(source).read_text(encoding="utf-8")
            except OSError as exc:
                raise ParseError(
                    {"reason": "cannot read input", "path": source, "error": str(exc)}
                ) from None
        payload.update(_read_document(text, source))
    inline = namespace.get("json")
    if inline is not None:
        payload.update(_read_document(inline, "--json"))
    return payload


def make_report(
    op: str,
    request: BaseModel | None,
    result: Any,
    *,
    residual: float | None = None,
    tolerance: float | None = None,
    passed: bool | None = None,
) -> Report:
    inputs = request.model_dump(mode="json", exclude_none=True) if request is not None else {}
    if passed is None and residual is not None and tolerance is not None:
        passed = residual <= tolerance
    return Report[Any](
        op=op,
        inputs=inputs,
        result=result,
        residual=residual,
        tolerance=tolerance,
        passed=passed,
    )
