"""Command-line entry point for monideal.

This module builds the argument parser, registers every subcommand and maps
outcomes to exit codes: 0 on success, 1 when ``verify`` finds a witness,
2 on parse and usage errors. Results go to standard output, diagnostics to
standard error.
"""

import argparse
import logging
import sys
from typing import List, Optional

from monideal import __version__
from monideal.commands import agraded, monomials, verify
from monideal.errors import MonidealError, ProblemSyntaxError
from monideal.logging_config import setup_logging

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monideal",
        description="Largest A-graded and monomial subideals of polynomial ideals.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    # Register subcommands
    agraded.register(subparsers)
    monomials.register(subparsers)
    verify.register(subparsers)
    return parser


def _log_level(verbosity: int) -> Optional[int]:
    if verbosity >= 2:
        return logging.DEBUG
    if verbosity == 1:
        return logging.INFO
    return None


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    setup_logging(_log_level(args.verbose))
    try:
        return args.handler(args)
    except ProblemSyntaxError as exc:
        print(f"{exc.source or args.input}: {exc}", file=sys.stderr)
    except (MonidealError, OSError) as exc:
        print(f"monideal {args.command}: error: {exc}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
