"""
Literal placement tables for the fixed gadgets of every construction.

Each T is given as (bar_start, orientation) in (row, col) coordinates with
row 0 at the bottom; see tetrotile.models.grid.t_cells for the shape
convention. Solid pieces of the extension rings are the fixed corner
gadget, dashed pieces the arm unit repeated once per step of k.
"""

from typing import Dict, Tuple

import numpy as np

from tetrotile.models.grid import Cell, Orientation, Region, Tiling, TPlacement, a_n_removed_cells

UP = Orientation.STEM_UP
DOWN = Orientation.STEM_DOWN
LEFT = Orientation.STEM_LEFT
RIGHT = Orientation.STEM_RIGHT

PlacementTable = Tuple[Tuple[Tuple[int, int], Orientation], ...]

# 4x4 pinwheel: one bar along each side, stems meeting in the middle.
PINWHEEL: PlacementTable = (
    ((0, 0), UP),
    ((0, 3), LEFT),
    ((3, 1), DOWN),
    ((1, 0), RIGHT),
)

# Width-2 frieze unit: row 1 holds cols 0..3, row 0 holds cols 1..4.
# Consecutive units interlock when shifted by 4 columns.
FRIEZE_UNIT: PlacementTable = (
    ((1, 0), DOWN),
    ((0, 2), UP),
)
FRIEZE_PERIOD = 4

# L-strip around the 4x4 square in the 6x6 square (inner block at rows 2..5, cols 0..3).
LSTRIP_6_TETROMINOES: PlacementTable = (
    ((1, 1), DOWN),
    ((0, 3), UP),
    ((1, 5), LEFT),
    ((3, 4), RIGHT),
)
LSTRIP_6_MONOMINOES: Tuple[Tuple[int, int], ...] = ((0, 0), (0, 1), (1, 0), (5, 5))

# A_3: the only T that fits, plus one monomino.
A3_TETROMINOES: PlacementTable = (((2, 0), DOWN),)
A3_MONOMINOES: Tuple[Tuple[int, int], ...] = ((1, 2),)

# A_5 with five T's and one monomino.
A5_TETROMINOES: PlacementTable = (
    ((2, 0), RIGHT),
    ((4, 1), DOWN),
    ((0, 2), LEFT),
    ((0, 3), RIGHT),
    ((2, 4), LEFT),
)
A5_MONOMINOES: Tuple[Tuple[int, int], ...] = ((2, 1),)

# Ring taking A_9 (placed at offset (2, 2)) to the main-diagonal mirror of A_11.
ONES_OFFSET = (2, 2)
ONES_SOLID_11: PlacementTable = (
    ((8, 1), LEFT),
    ((2, 0), RIGHT),
    ((2, 1), UP),
    ((1, 1), DOWN),
    ((0, 7), UP),
    ((0, 10), LEFT),
)
ONES_DASHED_11: PlacementTable = (
    ((6, 0), RIGHT),
    ((4, 1), LEFT),
    ((0, 3), UP),
    ((1, 5), DOWN),
)

# Ring taking A_7 (placed at offset (2, 0)) to the anti-diagonal mirror of A_9.
THREES_OFFSET = (2, 0)
THREES_SOLID_9: PlacementTable = (
    ((1, 0), RIGHT),
    ((0, 0), UP),
    ((1, 6), DOWN),
    ((2, 6), UP),
)
THREES_DASHED_9: PlacementTable = (
    ((1, 2), DOWN),
    ((0, 4), UP),
    ((3, 8), LEFT),
    ((5, 7), RIGHT),
)


def table_array(table: PlacementTable) -> np.ndarray:
    """(k, 4, 2) cell array for a placement table"""
    pieces = [TPlacement.from_bar(Cell(*start), orientation).cells for start, orientation in table]
    return np.array(pieces, dtype=np.int64).reshape(-1, 4, 2)


def _tiling(region: Region, table: PlacementTable, monominoes=()) -> Tiling:
    return Tiling(
        region,
        tuple(TPlacement.from_bar(Cell(*start), orientation) for start, orientation in table),
        tuple(Cell(*cell) for cell in monominoes),
    )


def _ring_region(outer: int, offset: Tuple[int, int], inner: int, outer_removed) -> Region:
    """Outer square minus its removed cells minus the embedded inner A_n"""
    dr, dc = offset
    inner_cells = {Cell(r + dr, c + dc) for r, c in Region.a_n(inner).cells}
    cells = {
        Cell(r, c)
        for r in range(outer)
        for c in range(outer)
        if Cell(r, c) not in outer_removed and Cell(r, c) not in inner_cells
    }
    return Region.explicit(cells)


def gadget_tilings() -> Dict[str, Tiling]:
    """Every gadget as a tiling of the region it is built on"""
    ones_removed = {Cell(c, r) for r, c in a_n_removed_cells(11)}
    threes_removed = {Cell(8 - c, 8 - r) for r, c in a_n_removed_cells(9)}
    return {
        "pinwheel_4x4": _tiling(Region.square(4), PINWHEEL),
        "lstrip_6": _tiling(Region.l_strip(6, 4), LSTRIP_6_TETROMINOES, LSTRIP_6_MONOMINOES),
        "a3": _tiling(Region.a_n(3), A3_TETROMINOES, A3_MONOMINOES),
        "a5": _tiling(Region.a_n(5), A5_TETROMINOES, A5_MONOMINOES),
        "extend_ones_11": _tiling(
            _ring_region(11, ONES_OFFSET, 9, ones_removed), ONES_SOLID_11 + ONES_DASHED_11
        ),
        "extend_threes_9": _tiling(
            _ring_region(9, THREES_OFFSET, 7, threes_removed), THREES_SOLID_9 + THREES_DASHED_9
        ),
    }
