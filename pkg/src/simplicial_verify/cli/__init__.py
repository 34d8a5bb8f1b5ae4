from .commands import (
    COMMANDS,
    ExitCode,
    cmd_check,
    cmd_export,
    cmd_glue,
    cmd_info,
    cmd_reproduce,
    cmd_verify,
)
from .parser import build_parser

__all__ = [
    "COMMANDS",
    "ExitCode",
    "build_parser",
    "cmd_check",
    "cmd_export",
    "cmd_glue",
    "cmd_info",
    "cmd_reproduce",
    "cmd_verify",
]
