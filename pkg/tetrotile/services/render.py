"""
Serialization and drawing of tilings.

JSON is the interchange format and the only one that parses back; ASCII and
SVG are render-only.

Document layout (schema 1):

    {"schema": 1,
     "region": {"kind": "square" | "an" | "lstrip" | "explicit",
                "n": int, "inner": int, "cells": [[r, c], ...]},
     "tetrominoes": [[[r, c], [r, c], [r, c], [r, c]], ...],
     "monominoes": [[r, c], ...],
     "trace": [{"kind": str, "params": [int, ...], "axis": str}, ...]}

"n" is required for square, an and lstrip (the outer side), "inner" for
lstrip only, "cells" for explicit only. "trace" is optional.
"""

import csv
import io
import json
import logging
import xml.etree.ElementTree as ET
from dataclasses import dataclass
from typing import Annotated, Dict, List, Optional, Sequence, Set, Tuple

from pydantic import (
    AfterValidator,
    BaseModel,
    ConfigDict,
    Field,
    NonNegativeInt,
    ValidationError,
    field_validator,
    model_validator,
)

from tetrotile.core.config import settings
from tetrotile.core.exceptions import DocumentError, RenderError, TilingError
from tetrotile.models.grid import Axis, Bounds, Cell, Region, RegionKind, Tiling, TPlacement
from tetrotile.models.results import SquareSummary
from tetrotile.models.trace import ConstructionStep, ConstructionTrace, StepKind

logger = logging.getLogger(__name__)

__all__ = [
    "SCHEMA_VERSION",
    "TilingDocument",
    "emit_json",
    "parse_json",
    "render_ascii",
    "render_svg",
    "piece_outline",
    "emit_csv_sequence",
    "emit_json_sequence",
]

SCHEMA_VERSION = 1

CellPair = Tuple[NonNegativeInt, NonNegativeInt]


def _check_piece(cells: List[CellPair]) -> List[CellPair]:
    if len(cells) != 4:
        raise ValueError(f"piece must have 4 cells, got {len(cells)}")
    return cells


PieceCells = Annotated[List[CellPair], AfterValidator(_check_piece)]


class RegionDocument(BaseModel):
    """Region descriptor of a tiling document"""
    kind: RegionKind
    n: Optional[int] = Field(default=None, ge=1, description="Side length; outer side for lstrip")
    inner: Optional[int] = Field(default=None, ge=0, description="Inner square side for lstrip")
    cells: Optional[List[CellPair]] = Field(default=None, description="Cell list for explicit regions")

    @model_validator(mode="after")
    def check_fields(self) -> "RegionDocument":
        if self.kind is RegionKind.EXPLICIT:
            if self.cells is None:
                raise ValueError("explicit region needs 'cells'")
        elif self.n is None:
            raise ValueError(f"{self.kind.value} region needs 'n'")
        if self.kind is RegionKind.LSTRIP and self.inner is None:
            raise ValueError("lstrip region needs 'inner'")
        return self

    @classmethod
    def from_region(cls, region: Region) -> "RegionDocument":
        if region.kind is RegionKind.EXPLICIT:
            return cls(kind=region.kind, cells=[tuple(cell) for cell in region.sorted_cells()])
        return cls(kind=region.kind, n=region.n, inner=region.inner)

    def to_region(self) -> Region:
        if self.kind is RegionKind.SQUARE:
            return Region.square(self.n)
        if self.kind is RegionKind.AN:
            return Region.a_n(self.n)
        if self.kind is RegionKind.LSTRIP:
            return Region.l_strip(self.n, self.inner)
        return Region.explicit(Cell(*cell) for cell in self.cells)


class StepDocument(BaseModel):
    kind: StepKind
    params: List[int] = Field(default_factory=list)
    axis: Optional[Axis] = None


class TilingDocument(BaseModel):
    """Versioned JSON form of a Tiling"""
    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(default=SCHEMA_VERSION, alias="schema")
    region: RegionDocument
    tetrominoes: List[PieceCells] = Field(default_factory=list)
    monominoes: List[CellPair] = Field(default_factory=list)
    trace: Optional[List[StepDocument]] = None

    @field_validator("schema_version")
    @classmethod
    def check_schema(cls, value: int) -> int:
        if value != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema version {value}, expected {SCHEMA_VERSION}")
        return value

    @classmethod
    def from_tiling(cls, tiling: Tiling, include_trace: bool = True) -> "TilingDocument":
        trace = None
        if include_trace and tiling.trace is not None:
            trace = [StepDocument.model_validate(step.to_dict()) for step in tiling.trace.steps]
        return cls(
            region=RegionDocument.from_region(tiling.region),
            tetrominoes=[[tuple(cell) for cell in piece.cells] for piece in tiling.tetrominoes],
            monominoes=[tuple(cell) for cell in tiling.monominoes],
            trace=trace,
        )

    def to_tiling(self) -> Tiling:
        """
        Build the Tiling. Piece shapes and coverage are left to the verifier.

        Raises:
            DocumentError: If the region or a piece cannot be constructed at all
        """
        try:
            region = self.region.to_region()
        except TilingError as exc:
            raise DocumentError(str(exc), field="region")

        tetrominoes = []
        for index, cells in enumerate(self.tetrominoes):
            try:
                tetrominoes.append(TPlacement(tuple(Cell(*cell) for cell in cells)))
            except TilingError as exc:
                raise DocumentError(str(exc), field=f"tetrominoes.{index}")

        trace = None
        if self.trace is not None:
            trace = ConstructionTrace(tuple(
                ConstructionStep(step.kind, tuple(step.params), step.axis) for step in self.trace
            ))
        return Tiling(region, tuple(tetrominoes), tuple(Cell(*cell) for cell in self.monominoes), trace=trace)


def emit_json(tiling: Tiling, include_trace: bool = True) -> str:
    """Canonical one-line JSON document for a tiling, newline-terminated"""
    document = TilingDocument.from_tiling(tiling, include_trace)
    return json.dumps(document.model_dump(mode="json", by_alias=True, exclude_none=True)) + "\n"


def parse_json(text: str) -> Tiling:
    """
    Parse a tiling document.

    Args:
        text: JSON text

    Returns:
        Tiling; overlapping or malformed pieces are kept for the verifier to report

    Raises:
        DocumentError: On JSON syntax errors (with line) or schema violations (with field path)
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{exc.msg} (column {exc.colno})", line=exc.lineno)

    try:
        document = TilingDocument.model_validate(data)
    except ValidationError as exc:
        error = exc.errors()[0]
        field = ".".join(str(part) for part in error["loc"]) or None
        cause = error.get("ctx", {}).get("error")
        raise DocumentError(str(cause) if cause is not None else error["msg"], field=field)

    return document.to_tiling()


# ASCII

_LETTERS = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz"
MONOMINO_CHAR = "."
EMPTY_CHAR = " "


def _drawing_bounds(tiling: Tiling) -> Bounds:
    cells = list(tiling.region.cells) + list(tiling.placed_cells())
    if not cells:
        return Bounds(0, -1, 0, -1)
    rows = [cell.row for cell in cells]
    cols = [cell.col for cell in cells]
    return Bounds(min(rows), max(rows), min(cols), max(cols))


def _color_pieces(tiling: Tiling) -> Dict[Cell, str]:
    """Greedy letter coloring of the T's in canonical order over edge adjacency"""
    owner: Dict[Cell, int] = {}
    for index, piece in enumerate(tiling.tetrominoes):
        for cell in piece.cells:
            owner[cell] = index

    neighbours: List[Set[int]] = [set() for _ in tiling.tetrominoes]
    for cell, index in owner.items():
        for other in (Cell(cell.row + 1, cell.col), Cell(cell.row, cell.col + 1)):
            other_index = owner.get(other)
            if other_index is not None and other_index != index:
                neighbours[index].add(other_index)
                neighbours[other_index].add(index)

    letters: List[str] = []
    for index in range(len(tiling.tetrominoes)):
        taken = {letters[other] for other in neighbours[index] if other < index}
        letter = next((ch for ch in _LETTERS if ch not in taken), None)
        if letter is None:
            raise RenderError(f"Piece {index} touches more than {len(_LETTERS)} letters")
        letters.append(letter)

    return {cell: letters[index] for cell, index in owner.items()}


def render_ascii(tiling: Tiling, max_side: Optional[int] = None) -> str:
    """
    Draw a tiling one character per cell, top row first.

    Adjacent T's get distinct letters, monominoes are '.', uncovered cells ' '.

    Raises:
        RenderError: If the bounding box is larger than max_side in either direction
    """
    max_side = max_side or settings.ascii_max_side
    bounds = _drawing_bounds(tiling)
    if bounds.height > max_side or bounds.width > max_side:
        raise RenderError(
            f"Board of {bounds.height}x{bounds.width} exceeds the ASCII limit of {max_side}"
        )

    chars = _color_pieces(tiling)
    for cell in tiling.monominoes:
        chars[cell] = MONOMINO_CHAR

    lines = []
    for row in range(bounds.max_row, bounds.min_row - 1, -1):
        lines.append("".join(
            chars.get(Cell(row, col), EMPTY_CHAR) for col in range(bounds.min_col, bounds.max_col + 1)
        ))
    return "\n".join(lines) + "\n" if lines else ""


# SVG

@dataclass(frozen=True)
class SvgStyle:
    """Drawing constants; lengths are in SVG user units"""
    cell_size: float = 20.0
    margin: float = 10.0
    stroke: str = "#000000"
    stroke_width: float = 3.0
    line_join: str = "round"
    tetromino_fill: str = "#ffffff"
    hatch_spacing: float = 4.0
    hatch_stroke_width: float = 1.0
    hatch_angle: float = 45.0


SVG_STYLE = SvgStyle()
SVG_NAMESPACE = "http://www.w3.org/2000/svg"
HATCH_ID = "monomino-hatch"


def piece_outline(cells: Sequence[Cell]) -> List[Tuple[int, int]]:
    """
    Boundary of a simply connected polyomino as lattice points (x=col, y=row),
    counterclockwise, collinear points merged, starting from the lowest
    left-most corner.
    """
    edges = set()
    for r, c in cells:
        for edge in (((c, r), (c + 1, r)), ((c + 1, r), (c + 1, r + 1)),
                     ((c + 1, r + 1), (c, r + 1)), ((c, r + 1), (c, r))):
            reverse = (edge[1], edge[0])
            if reverse in edges:
                edges.discard(reverse)
            else:
                edges.add(edge)
    if not edges:
        return []

    following = dict(edges)
    start = min(following, key=lambda point: (point[1], point[0]))
    points = [start]
    point = following[start]
    while point != start:
        points.append(point)
        point = following[point]

    # drop the middle point of straight runs
    outline = []
    count = len(points)
    for i, (x, y) in enumerate(points):
        px, py = points[i - 1]
        nx, ny = points[(i + 1) % count]
        if (x - px) * (ny - y) - (y - py) * (nx - x) != 0:
            outline.append((x, y))
    return outline


def _path_data(outline: Sequence[Tuple[int, int]], bounds: Bounds, style: SvgStyle) -> str:
    def point(x: int, y: int) -> str:
        px = style.margin + (x - bounds.min_col) * style.cell_size
        py = style.margin + (bounds.max_row + 1 - y) * style.cell_size
        return f"{px:g} {py:g}"

    head, *rest = outline
    return "M " + point(*head) + "".join(" L " + point(*vertex) for vertex in rest) + " Z"


def render_svg(tiling: Tiling, cell_size: Optional[float] = None) -> str:
    """
    Standalone SVG with one closed outline path per piece.

    T's are white with thick round-joined outlines; monominoes are hatched
    unit squares.
    """
    style = SvgStyle(cell_size=cell_size or settings.svg_cell_size)
    bounds = _drawing_bounds(tiling)
    width = 2 * style.margin + max(bounds.width, 0) * style.cell_size
    height = 2 * style.margin + max(bounds.height, 0) * style.cell_size

    svg = ET.Element("svg", {
        "xmlns": SVG_NAMESPACE,
        "version": "1.1",
        "width": f"{width:g}",
        "height": f"{height:g}",
        "viewBox": f"0 0 {width:g} {height:g}",
    })

    defs = ET.SubElement(svg, "defs")
    pattern = ET.SubElement(defs, "pattern", {
        "id": HATCH_ID,
        "patternUnits": "userSpaceOnUse",
        "width": f"{style.hatch_spacing:g}",
        "height": f"{style.hatch_spacing:g}",
        "patternTransform": f"rotate({style.hatch_angle:g})",
    })
    ET.SubElement(pattern, "line", {
        "x1": "0", "y1": "0", "x2": "0", "y2": f"{style.hatch_spacing:g}",
        "stroke": style.stroke,
        "stroke-width": f"{style.hatch_stroke_width:g}",
    })

    stroke = {
        "stroke": style.stroke,
        "stroke-width": f"{style.stroke_width:g}",
        "stroke-linejoin": style.line_join,
    }
    tetrominoes = ET.SubElement(svg, "g", {"class": "tetrominoes"})
    for piece in tiling.tetrominoes:
        ET.SubElement(tetrominoes, "path", {
            "class": "tetromino",
            "d": _path_data(piece_outline(piece.cells), bounds, style),
            "fill": style.tetromino_fill,
            **stroke,
        })
    monominoes = ET.SubElement(svg, "g", {"class": "monominoes"})
    for cell in tiling.monominoes:
        ET.SubElement(monominoes, "path", {
            "class": "monomino",
            "d": _path_data(piece_outline([cell]), bounds, style),
            "fill": f"url(#{HATCH_ID})",
            **stroke,
        })

    logger.debug("Rendered %d pieces to SVG", tiling.piece_count)
    return ET.tostring(svg, encoding="unicode") + "\n"


# Sequence tables

SEQUENCE_FIELDS = ("n", "max_t", "min_mono", "residue")


def emit_csv_sequence(summaries: Sequence[SquareSummary]) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=SEQUENCE_FIELDS, lineterminator="\n")
    writer.writeheader()
    for summary in summaries:
        writer.writerow(summary.model_dump())
    return buffer.getvalue()


def emit_json_sequence(summaries: Sequence[SquareSummary]) -> str:
    return json.dumps([summary.model_dump() for summary in summaries]) + "\n"
