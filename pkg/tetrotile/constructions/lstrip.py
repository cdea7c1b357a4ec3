"""
Squares of side 4m + 2: a pinwheel square in the top-left corner plus an
L-shaped strip of width 2 along the bottom and right edges.

The strip carries three monominoes in its bottom-left corner and one in its
top-right corner; the rest of both arms is frieze.
"""

from typing import List

from tetrotile.constructions.base import PieceBuilder, frieze_array
from tetrotile.core.exceptions import ConstructionError
from tetrotile.models.grid import Cell, Tiling, TPlacement
from tetrotile.models.trace import ConstructionStep, StepKind


def frieze_strip(length: int) -> List[TPlacement]:
    """
    Interlocking T's filling a jagged width-2 strip segment.

    Row 1 holds cols 0..length-1 and row 0 holds cols 1..length; two T's per
    period of 4 columns.

    Raises:
        ConstructionError: If length is negative or not a multiple of 4
    """
    return [
        TPlacement(tuple(Cell(r, c) for r, c in piece))
        for piece in frieze_array(length).tolist()
    ]


def _strip_steps(m: int) -> List[ConstructionStep]:
    return [
        ConstructionStep(StepKind.EXTEND_L, (m,)),
        ConstructionStep(StepKind.FRIEZE_REPEAT, (4 * m,)),
    ]


def l_strip_tiling(m: int) -> Tiling:
    """The strip of LStrip(4m+2, 4m) on its own: 4m T's and 4 monominoes"""
    if m < 0:
        raise ConstructionError(f"m must be nonnegative, got {m}")
    return PieceBuilder().apply_all(_strip_steps(m)).build()


def tile_square_4m2(m: int) -> Tiling:
    """
    Tile the (4m+2) x (4m+2) square with 4m^2 + 4m T's and 4 monominoes.

    Raises:
        ConstructionError: If m < 0
    """
    if m < 0:
        raise ConstructionError(f"m must be nonnegative, got {m}")
    builder = PieceBuilder()
    if m >= 1:
        builder.apply(ConstructionStep(StepKind.BASE_4X4, (m,)))
    return builder.apply_all(_strip_steps(m)).build()
