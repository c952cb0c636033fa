"""Generic command utilities for declarative verbs."""

from __future__ import annotations

from orbitkit.cli.generic.command import (
    Command,
    CommandContext,
    create_command,
    load_payload,
    make_report,
)
from orbitkit.cli.generic.options import OptionField, OptionType
from orbitkit.cli.generic.router import CommandRouter

__all__ = [
    "Command",
    "CommandContext",
    "CommandRouter",
    "OptionField",
    "OptionType",
    "create_command",
    "load_payload",
    "make_report",
]
