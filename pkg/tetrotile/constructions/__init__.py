from tetrotile.constructions.a_region import extend_A_ones, extend_A_threes, tile_A
from tetrotile.constructions.base import PieceBuilder, replay_trace
from tetrotile.constructions.dispatch import tile_any, tile_square_odd
from tetrotile.constructions.gadgets import gadget_tilings
from tetrotile.constructions.lstrip import frieze_strip, l_strip_tiling, tile_square_4m2
from tetrotile.constructions.pinwheel import tile_square_4m

__all__ = [
    "PieceBuilder",
    "replay_trace",
    "gadget_tilings",
    "tile_square_4m",
    "frieze_strip",
    "l_strip_tiling",
    "tile_square_4m2",
    "tile_A",
    "extend_A_ones",
    "extend_A_threes",
    "tile_square_odd",
    "tile_any",
]
