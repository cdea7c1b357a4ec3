import logging
from typing import TextIO

from tetrotile.commands.config import EXIT_INVALID, EXIT_OK, CliConfig
from tetrotile.commands.output import read_text, write_json, write_tiling
from tetrotile.constructions import tile_any
from tetrotile.services.render import parse_json
from tetrotile.services.verifier import verify

logger = logging.getLogger(__name__)


def handle_tile(config: CliConfig, stdin: TextIO, out: TextIO, err: TextIO) -> int:
    """Construct the minimal tiling of the n x n square, verify it, then emit it"""
    tiling = tile_any(config.n)
    report = verify(tiling)
    if not report.valid:
        err.write(f"error: construction for n={config.n} failed verification: {report.summary()}\n")
        return EXIT_INVALID
    logger.info("n=%d: %s", config.n, report.summary())
    write_tiling(out, tiling, config.format, include_trace=not config.no_trace)
    return EXIT_OK


def handle_verify(config: CliConfig, stdin: TextIO, out: TextIO, err: TextIO) -> int:
    """Report on a document; exit 0 iff it is a valid tiling"""
    tiling = parse_json(read_text(config.input, stdin))
    report = verify(tiling)
    write_json(out, report.model_dump(mode="json"))
    if report.valid:
        return EXIT_OK

    err.write(f"{report.summary()}\n")
    if report.overlaps:
        err.write("overlapping cells: " + " ".join(f"({r}, {c})" for r, c in report.overlaps) + "\n")
    if report.gaps:
        err.write("uncovered cells: " + " ".join(f"({r}, {c})" for r, c in report.gaps) + "\n")
    for index, reason in report.bad_pieces:
        err.write(f"piece {index}: {reason}\n")
    return EXIT_INVALID


def handle_render(config: CliConfig, stdin: TextIO, out: TextIO, err: TextIO) -> int:
    tiling = parse_json(read_text(config.input, stdin))
    # JSON re-emission normalizes piece order
    write_tiling(out, tiling, config.format)
    return EXIT_OK
