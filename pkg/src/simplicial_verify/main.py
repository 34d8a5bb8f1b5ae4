"""
simplicial-verify command line entry point.

Configures structured logging on stderr, so that stdout carries only command
output, then dispatches to the subcommand.
"""

import logging
import sys
from collections.abc import Sequence

import structlog

from simplicial_verify.cli import COMMANDS, ExitCode, build_parser
from simplicial_verify.errors import SimplicialVerifyError

logger = structlog.get_logger(__name__)


def _stderr_logger(*_: object) -> structlog.PrintLogger:
    # resolved per logger so a replaced sys.stderr is picked up
    return structlog.PrintLogger(file=sys.stderr)


def configure_logging(level: str) -> None:
    structlog.configure(
        processors=[
            structlog.processors.add_log_level,
            structlog.processors.TimeStamper(fmt="%H:%M:%S"),
            structlog.dev.ConsoleRenderer(colors=False),
        ],
        wrapper_class=structlog.make_filtering_bound_logger(
            logging.getLevelNamesMapping().get(level.upper(), logging.WARNING)
        ),
        logger_factory=_stderr_logger,
        cache_logger_on_first_use=False,
    )


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.log_level)
    try:
        return COMMANDS[args.command](args)
    except SimplicialVerifyError as e:
        logger.debug("Command failed.", command=args.command, error=str(e))
        print(f"error: {e}", file=sys.stderr)
        return ExitCode.ERROR
    except OSError as e:
        # unwritable output paths and the like
        logger.debug("Command failed.", command=args.command, error=str(e))
        print(f"error: {e}", file=sys.stderr)
        return ExitCode.ERROR


def start() -> None:
    """
    Start the command line interface.
    """
    sys.exit(run())


if __name__ == "__main__":
    start()
