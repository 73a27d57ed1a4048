"""
Command-line layer for the palindromic density toolkit

Key features:
- main(argv): parse, dispatch to a command handler, map errors to exit codes
- Exit codes: 0 success, 1 verification mismatch, 2 usage/validation error
"""
from __future__ import annotations

import sys
from typing import List, Optional

import pydantic

from config import EXIT_USAGE, MessageKey, MessageProvider, default_messages
from utils import PalindromicDensityError, logger

from .commands import COMMANDS
from .parser import build_parser

def main(argv: Optional[List[str]] = None, messages: MessageProvider = default_messages) -> int:
    """
    Run one command

    Args:
        argv: Arguments without the program name; defaults to sys.argv[1:]
        messages: Provider for user-facing text

    Returns:
        Process exit code
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else 0

    handler = COMMANDS[args.command]
    try:
        return handler(args, messages)
    except PalindromicDensityError as e:
        logger.debug(f"{args.command} failed: {e.to_dict()}")
        print(e.message, file=sys.stderr)
        return e.exit_code
    except pydantic.ValidationError as e:
        first = e.errors()[0]
        print(first.get("msg", str(e)), file=sys.stderr)
        return EXIT_USAGE
    except Exception as e:
        logger.exception(f"{args.command} error: {e}")
        print(messages.format(MessageKey.UNEXPECTED_ERROR, reason=str(e)), file=sys.stderr)
        return EXIT_USAGE

__all__ = ["main", "build_parser", "COMMANDS"]
