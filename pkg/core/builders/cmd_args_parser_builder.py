from __future__ import annotations

import argparse
from typing import Any, Optional

from pydantic import Field

from core.foundation.models.strict_mode import StrictModel


class Argument(StrictModel):
    name: str = Field()
    type: Any = Field()
    help: str = Field()
    default: Any = Field(default=None)
    choices: Optional[list[Any]] = Field(default=None)
    positional: bool = Field(default=False)


class Command(StrictModel):
    name: str = Field()
    help: str = Field()
    args: list[Argument] = Field(default_factory=list)
    subcommands: list[Command] = Field(default_factory=list)


def _add_arguments(parser: argparse.ArgumentParser, args: list[Argument]) -> None:
    for arg in args:
        if arg.positional:
            parser.add_argument(arg.name, type=arg.type, help=arg.help, choices=arg.choices)
        elif arg.type == bool:
            parser.add_argument(f"--{arg.name}", action="store_true", help=arg.help, default=bool(arg.default))
        else:
            parser.add_argument(f"--{arg.name}", type=arg.type, help=arg.help, default=arg.default, choices=arg.choices)


def _add_commands(parser: argparse.ArgumentParser, commands: list[Command], dest: str) -> None:
    sub = parser.add_subparsers(dest=dest, required=True)
    for command in commands:
        child = sub.add_parser(command.name, help=command.help, description=command.help)
        _add_arguments(child, command.args)
        if command.subcommands:
            _add_commands(child, command.subcommands, dest="verb")


def build_cmd_args_parser(description: str, args: list[Argument],
                          commands: Optional[list[Command]] = None) -> argparse.ArgumentParser:
    """
    Build an argparse parser from declarative argument lists.
    :param args: options shared at the top level
    :param commands: subcommands (stored under ``command``); nested ones are stored under ``verb``
    """
    parser = argparse.ArgumentParser(description=description)
    _add_arguments(parser, args)
    if commands:
        _add_commands(parser, commands, dest="command")
    return parser
