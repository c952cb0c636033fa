"""Declarative option system for generic commands."""

from __future__ import annotations

import argparse
import dataclasses
from enum import Enum
from typing import Any


class OptionType(Enum):
    """Supported option types."""

    VALUE = "value"
    FLAG = "flag"


@dataclasses.dataclass(frozen=True)
class OptionField:
    """Declarative command-line option merged into the request payload.

    Args:
        payload_key: Key of the request payload the option fills.
        option_type: VALUE takes an argument; FLAG is a boolean switch.
        flag_name: Command-line spelling. Defaults to ``--payload-key``.
        python_type: Converter for VALUE options. Default str.
        help: Help text.
    """

    payload_key: str
    option_type: OptionType = OptionType.VALUE
    flag_name: str | None = None
    python_type: type = str
    help: str | None = None

    @property
    def effective_flag_name(self) -> str:
        if self.flag_name is not None:
            return self.flag_name
        return "--" + self.payload_key.replace("_", "-")


def add_options(parser: argparse.ArgumentParser, options: list[OptionField]) -> None:
    """Register every option on ``parser``; unset options stay ``None``."""
    for option in options:
        if option.option_type == OptionType.FLAG:
            parser.add_argument(
                option.effective_flag_name,
                dest=option.payload_key,
                action="store_true",
                default=None,
                help=option.help,
            )
        else:
            parser.add_argument(
                option.effective_flag_name,
                dest=option.payload_key,
                type=option.python_type,
                default=None,
                help=option.help,
            )


def apply_options(
    payload: dict[str, Any], options: list[OptionField], values: dict[str, Any]
) -> dict[str, Any]:
    """Merge set options over the JSON payload; options win."""
    merged = dict(payload)
    for option in options:
        value = values.get(option.payload_key)
        if value is not None:
            merged[option.payload_key] = value
    return merged
