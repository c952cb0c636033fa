"""Command routers: named groups of verbs that nest like path prefixes."""

from __future__ import annotations

import argparse

from orbitkit.cli.generic.command import Command
from orbitkit.cli.generic.options import add_options


class CommandRouter:
    """A named group of verbs; routers nest through ``include_router``."""

    def __init__(self, prefix: str = "", help: str = "") -> None:
        self.prefix = prefix
        self.help = help
        self.commands: dict[str, Command] = {}
        self.routers: list[CommandRouter] = []

    def add_command(self, command: Command) -> None:
        if command.name in self.commands:
            raise ValueError(f"duplicate command {self.prefix} {command.name}")
        self.commands[command.name] = command

    def include_router(self, router: "CommandRouter") -> None:
        self.routers.append(router)

    def verbs(self) -> list[str]:
        """Every verb path below this router, e.g. ``"heis mul"``."""
        paths = [f"{self.prefix} {name}".strip() for name in self.commands]
        for router in self.routers:
            paths += [f"{self.prefix} {path}".strip() for path in router.verbs()]
        return paths

    def build(
        self, subparsers: argparse._SubParsersAction, common: list[argparse.ArgumentParser]
    ) -> None:
        """Attach this router's commands, then the nested routers, under ``subparsers``."""
        if self.prefix:
            group = subparsers.add_parser(self.prefix, help=self.help, description=self.help)
            target = group.add_subparsers(dest=f"{self.prefix}_verb", metavar="VERB")
            target.required = True
        else:
            target = subparsers
        for name, command in self.commands.items():
            parser = target.add_parser(
                name, help=command.help, description=command.help, parents=common
            )
            add_options(parser, command.options)
            parser.set_defaults(command=command)
        for router in self.routers:
            router.build(target, common)
