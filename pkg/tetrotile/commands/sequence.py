from typing import TextIO

from tetrotile.commands.config import EXIT_OK, CliConfig, OutputFormat
from tetrotile.core.config import settings
from tetrotile.services.formulas import sequence
from tetrotile.services.render import emit_csv_sequence, emit_json_sequence


def handle_sequence(config: CliConfig, stdin: TextIO, out: TextIO, err: TextIO) -> int:
    """Table of (n, max_t, min_mono) for n = 1..bound"""
    summaries = sequence(config.bound or settings.sequence_default_bound)
    if config.format is OutputFormat.JSON:
        out.write(emit_json_sequence(summaries))
    else:
        out.write(emit_csv_sequence(summaries))
    return EXIT_OK
