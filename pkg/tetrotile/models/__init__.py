from .grid import (
    Cell,
    Orientation,
    Axis,
    RegionKind,
    Bounds,
    TPlacement,
    Region,
    Tiling,
    t_cells,
    recognize,
    reflect_region,
    reflect_tiling,
    translate_tiling,
    rotate_tiling,
    dihedral_images,
    transform_array,
)
from .trace import StepKind, ConstructionStep, ConstructionTrace
from .results import (
    VerificationReport,
    SquareSummary,
    SearchLimits,
    SearchStatus,
    SearchResult,
    CountResult,
    MinimumResult,
)

__all__ = [
    "Cell", "Orientation", "Axis", "RegionKind", "Bounds",
    "TPlacement", "Region", "Tiling",
    "t_cells", "recognize", "reflect_region", "reflect_tiling", "translate_tiling", "rotate_tiling",
    "dihedral_images", "transform_array",
    "StepKind", "ConstructionStep", "ConstructionTrace",
    "VerificationReport", "SquareSummary", "SearchLimits", "SearchStatus", "SearchResult", "CountResult", "MinimumResult",
]
