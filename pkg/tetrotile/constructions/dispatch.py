import logging
from typing import Callable, Dict

from tetrotile.constructions.a_region import check_odd_side, induction_steps
from tetrotile.constructions.base import PieceBuilder
from tetrotile.constructions.lstrip import tile_square_4m2
from tetrotile.constructions.pinwheel import tile_square_4m
from tetrotile.core.exceptions import ConstructionError
from tetrotile.models.grid import Tiling
from tetrotile.models.trace import ConstructionStep, StepKind

logger = logging.getLogger(__name__)


def tile_square_odd(n: int) -> Tiling:
    """
    Tile the odd n x n square with (n^2 - 5)/4 T's and 5 monominoes.

    The A_n tiling is completed by monominoes on its four removed cells.

    Raises:
        ConstructionError: If n is even or less than 3
    """
    check_odd_side(n)
    steps = induction_steps(n) + [ConstructionStep(StepKind.FILL_CORNERS)]
    return PieceBuilder().apply_all(steps).build()


def _tile_single_cell(n: int) -> Tiling:
    return PieceBuilder().apply(ConstructionStep(StepKind.SINGLE_CELL)).build()


# n mod 4 -> construction taking n
_SQUARE_BUILDERS: Dict[int, Callable[[int], Tiling]] = {
    0: lambda n: tile_square_4m(n // 4),
    1: tile_square_odd,
    2: lambda n: tile_square_4m2(n // 4),
    3: tile_square_odd,
}


def tile_any(n: int) -> Tiling:
    """
    Tile the n x n square with the fewest possible monominoes.

    Args:
        n: Side length, at least 1

    Returns:
        Tiling with max_t_count(n) tetrominoes and min_monomino_count(n) monominoes

    Raises:
        ConstructionError: If n < 1
    """
    if n < 1:
        raise ConstructionError(f"n must be a positive integer, got {n}")
    builder = _tile_single_cell if n == 1 else _SQUARE_BUILDERS[n % 4]
    tiling = builder(n)
    logger.debug("Tiled %dx%d: %d T's, %d monominoes", n, n, tiling.t_count, tiling.mono_count)
    return tiling
