"""Exception hierarchy shared by the library and the command line."""

from __future__ import annotations

from typing import Any


class OrbitkitError(Exception):
    """Base error. ``kind`` is a stable machine-readable tag, ``detail`` free-form."""

    kind: str = "error"
    exit_code: int = 1

    def __init__(self, detail: str | dict[str, Any], *, kind: str | None = None) -> None:
        self.detail = detail
        if kind is not None:
            self.kind = kind
        super().__init__(detail if isinstance(detail, str) else str(detail))

    def to_dict(self) -> dict[str, Any]:
        return {"kind": self.kind, "detail": self.detail}


class DomainError(OrbitkitError):
    kind = "domain"
    exit_code = 2


class IllConditionedError(DomainError):
    kind = "ill_conditioned"


class ParseError(OrbitkitError):
    kind = "parse"
    exit_code = 3


class UsageError(OrbitkitError):
    kind = "usage"
    exit_code = 64
