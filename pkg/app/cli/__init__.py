import argparse
from typing import List, Optional

from app.cli.base import EXIT_OK, EXIT_USAGE, run_handler
from app.cli.commands import COMMANDS
from app.core.config import settings


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog=settings.PROJECT_NAME, description="Exact computations on even lattices")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        command.register(subparsers)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on bad usage and 0 on --help
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    return run_handler(args.handler, args)
