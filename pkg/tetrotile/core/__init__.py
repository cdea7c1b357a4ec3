from .config import Settings, settings
from .exceptions import (
    TilingError,
    InvalidPieceError,
    RegionError,
    TransformError,
    ConstructionError,
    RenderError,
    DocumentError,
    SearchAborted,
)

__all__ = [
    "Settings",
    "settings",
    "TilingError",
    "InvalidPieceError",
    "RegionError",
    "TransformError",
    "ConstructionError",
    "RenderError",
    "DocumentError",
    "SearchAborted",
]
