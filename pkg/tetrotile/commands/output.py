import json
from typing import Any, TextIO

from tetrotile.commands.config import OutputFormat
from tetrotile.models.grid import Tiling
from tetrotile.services.render import emit_json, render_ascii, render_svg


def write_json(out: TextIO, data: Any) -> None:
    out.write(json.dumps(data) + "\n")


def read_text(path: str, stdin: TextIO) -> str:
    if path == "-":
        return stdin.read()
    with open(path, encoding="utf-8") as handle:
        return handle.read()


def write_tiling(out: TextIO, tiling: Tiling, fmt: OutputFormat, include_trace: bool = True) -> None:
    if fmt is OutputFormat.ASCII:
        out.write(render_ascii(tiling))
    elif fmt is OutputFormat.SVG:
        out.write(render_svg(tiling))
    else:
        out.write(emit_json(tiling, include_trace=include_trace))
