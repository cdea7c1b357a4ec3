"""
Command-line entry point.

Structured results go to stdout (or --output), diagnostics to stderr.
Exit codes: 0 success, 1 invalid tiling or unexpected search status,
2 usage error, 3 search aborted by its node or time limit.
"""

import argparse
import json
import logging
import sys
from contextlib import contextmanager
from typing import Callable, Dict, Iterator, List, Optional, TextIO

from pydantic import ValidationError

from tetrotile.commands import search as search_commands
from tetrotile.commands import sequence as sequence_commands
from tetrotile.commands import tiling as tiling_commands
from tetrotile.commands.config import (
    EXIT_ABORTED,
    EXIT_INVALID,
    EXIT_USAGE,
    FORMATS,
    SEARCH_REGIONS,
    CliConfig,
    Command,
)
from tetrotile.core.config import settings
from tetrotile.core.exceptions import DocumentError, SearchAborted, TilingError
from tetrotile.core.log_config import configure_logging, verbosity_to_level
from tetrotile.models.results import SearchStatus

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tetrotile",
        description="Tile squares with T-tetrominoes and the fewest monominoes",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {settings.VERSION}")
    subparsers = parser.add_subparsers(dest="command", required=True)

    def add(command: Command, help_text: str) -> argparse.ArgumentParser:
        sub = subparsers.add_parser(command.value, help=help_text)
        sub.add_argument("-v", "--verbose", action="count", default=0,
                         help="log to stderr (-v info, -vv debug)")
        sub.add_argument("--format", choices=[fmt.value for fmt in FORMATS[command]],
                         help=f"output format (default {FORMATS[command][0].value})")
        sub.add_argument("--output", default="-", help="output path, '-' for stdout")
        return sub

    def add_search_flags(sub: argparse.ArgumentParser, regions: bool = True) -> None:
        sub.add_argument("--n", type=int, required=True, help="side length")
        if regions:
            sub.add_argument("--region", choices=sorted(kind.value for kind in SEARCH_REGIONS),
                             default="square", help="search the n x n square or A_n")
        sub.add_argument("--max-nodes", type=int, help=f"node limit per search (default {settings.max_nodes})")
        sub.add_argument("--max-seconds", type=float,
                         help=f"time limit per search (default {settings.max_seconds:g})")

    tile = add(Command.TILE, "construct, verify and emit a minimal tiling of the n x n square")
    tile.add_argument("--n", type=int, required=True, help="side length")
    tile.add_argument("--no-trace", action="store_true", help="leave the construction trace out of JSON")

    for command, help_text in ((Command.VERIFY, "check a JSON tiling document"),
                               (Command.RENDER, "draw a JSON tiling document")):
        sub = add(command, help_text)
        sub.add_argument("--input", required=True, help="document path, '-' for stdin")

    solve = add(Command.SOLVE, "search for a tiling within a monomino budget")
    add_search_flags(solve)
    solve.add_argument("--budget", type=int, required=True, help="maximum number of monominoes")
    solve.add_argument("--parallel", action="store_true", help="split the search over processes")
    solve.add_argument("--workers", type=int, help="process count for --parallel")
    solve.add_argument("--expect", choices=[SearchStatus.FOUND.value, SearchStatus.INFEASIBLE.value],
                       help="exit 1 unless the search ends with this status")

    minimum = add(Command.MIN, "find the least monomino count by exhaustive search")
    add_search_flags(minimum, regions=False)
    minimum.add_argument("--parallel", action="store_true", help="split each search over processes")
    minimum.add_argument("--workers", type=int, help="process count for --parallel")

    count = add(Command.COUNT, "count tilings within a monomino budget")
    add_search_flags(count)
    count.add_argument("--budget", type=int, required=True, help="maximum number of monominoes")
    count.add_argument("--symmetry", action="store_true", help="also count tilings up to symmetry")

    sequence = add(Command.SEQUENCE, "closed-form optimum counts for n = 1..bound")
    sequence.add_argument("--bound", type=int, help=f"largest n (default {settings.sequence_default_bound})")

    return parser


def parse_config(argv: Optional[List[str]] = None) -> CliConfig:
    """
    Parse and validate arguments before any work starts.

    Raises:
        SystemExit: With status 2 on any usage error
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    values = {key: value for key, value in vars(args).items() if value is not None}
    try:
        return CliConfig(**values)
    except ValidationError as exc:
        error = exc.errors()[0]
        location = ".".join(str(part) for part in error["loc"])
        message = str(error.get("ctx", {}).get("error", error["msg"]))
        parser.error(f"{location}: {message}" if location else message)


Handler = Callable[[CliConfig, TextIO, TextIO, TextIO], int]

_HANDLERS: Dict[Command, Handler] = {
    Command.TILE: tiling_commands.handle_tile,
    Command.VERIFY: tiling_commands.handle_verify,
    Command.RENDER: tiling_commands.handle_render,
    Command.SOLVE: search_commands.handle_solve,
    Command.MIN: search_commands.handle_min,
    Command.COUNT: search_commands.handle_count,
    Command.SEQUENCE: sequence_commands.handle_sequence,
}


@contextmanager
def _open_output(path: str, stdout: TextIO) -> Iterator[TextIO]:
    if path == "-":
        yield stdout
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as handle:
            yield handle


def run(
    config: CliConfig,
    stdin: Optional[TextIO] = None,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
) -> int:
    """
    Execute one validated command.

    Returns:
        Process exit code
    """
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    configure_logging(verbosity_to_level(config.verbose, settings.log_level))
    logger.info("Running %s", config.command.value)

    try:
        with _open_output(config.output, stdout) as out:
            try:
                return _HANDLERS[config.command](config, stdin, out, stderr)
            except SearchAborted as exc:
                out.write(json.dumps(exc.result.to_dict()) + "\n")
                stderr.write(f"error: {exc}\n")
                return EXIT_ABORTED
    except DocumentError as exc:
        stderr.write(f"error: invalid document: {exc}\n")
        return EXIT_INVALID
    except OSError as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except TilingError as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


def main(argv: Optional[List[str]] = None) -> int:
    try:
        config = parse_config(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
