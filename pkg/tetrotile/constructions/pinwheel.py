from tetrotile.constructions.base import PieceBuilder
from tetrotile.core.exceptions import ConstructionError
from tetrotile.models.grid import Tiling
from tetrotile.models.trace import ConstructionStep, StepKind


def tile_square_4m(m: int) -> Tiling:
    """
    Tile the 4m x 4m square with T-tetrominoes only.

    The square is an m x m array of 4x4 pinwheel blocks.

    Args:
        m: Number of blocks per side, at least 1

    Returns:
        Tiling with 4m^2 tetrominoes and no monominoes

    Raises:
        ConstructionError: If m < 1
    """
    if m < 1:
        raise ConstructionError(f"m must be at least 1, got {m}")
    return PieceBuilder().apply(ConstructionStep(StepKind.BASE_4X4, (m,))).build()
