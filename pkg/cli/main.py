"""
qform command-line entry point.

Exit codes:
    0  success
    1  domain or math error (any QFormError other than a parse error)
    2  usage or parse error

Output is plain text by default, JSON with --json. Logs go to stderr.
"""

import argparse
import sys
from typing import List, Optional

import orjson
import structlog
from pydantic import BaseModel

from cli.commands import COMMAND_MODULES
from cli.parsing import join_negative_values
from config import configure_logging, settings
from services.errors import USAGE_ERRORS, QFormError

logger = structlog.get_logger()

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    """Top-level parser with one subparser per command."""
    parser = argparse.ArgumentParser(
        prog=settings.app_name,
        description="Exact ternary algebras of binary quadratic forms."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {settings.app_version}")
    parser.add_argument("--log-level", default=None, help=f"Log level (default {settings.log_level})")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="Emit JSON instead of text")

    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    for module in COMMAND_MODULES:
        module.register(subparsers, common)
    return parser


def emit(response: BaseModel, as_json: bool) -> None:
    """Write a response model to stdout."""
    if as_json:
        payload = orjson.dumps(response.model_dump(mode="json"), option=orjson.OPT_INDENT_2)
        sys.stdout.write(payload.decode("utf-8") + "\n")
    else:
        sys.stdout.write(response.render_text() + "\n")


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run one command.

    Args:
        argv: Arguments without the program name (sys.argv[1:] by default)

    Returns:
        Process exit code
    """
    parser = build_parser()
    try:
        args = parser.parse_args(join_negative_values(sys.argv[1:] if argv is None else argv))
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    configure_logging(args.log_level or settings.log_level, settings.log_json)
    command = " ".join(filter(None, (args.command, getattr(args, "action", None))))
    logger.debug("command_dispatched", command=command)

    try:
        response = args.handler(args)
    except USAGE_ERRORS as exc:
        sys.stderr.write(args.usage_parser.format_usage())
        sys.stderr.write(f"{parser.prog}: error: {exc}\n")
        return EXIT_USAGE
    except QFormError as exc:
        logger.warning("command_failed", command=command, error=type(exc).__name__, detail=str(exc))
        sys.stderr.write(f"{parser.prog}: {type(exc).__name__}: {exc}\n")
        return EXIT_FAILURE

    emit(response, args.json)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
