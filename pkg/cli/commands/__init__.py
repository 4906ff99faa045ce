"""
Subcommands.

Each module exposes register(subparsers, common), which adds its parser(s)
and sets `handler` to a function Namespace -> response model.
"""

from . import info, compose, conic, value, verify

COMMAND_MODULES = (info, compose, conic, value, verify)

__all__ = ["COMMAND_MODULES"]
