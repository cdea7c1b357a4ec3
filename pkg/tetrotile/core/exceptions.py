"""
Exception classes for tetrotile
"""

from typing import Optional


class TilingError(Exception):
    """Base exception for all tetrotile errors"""
    pass


class InvalidPieceError(TilingError, ValueError):
    """Raised when a set of cells is not a legal piece"""
    pass


class RegionError(TilingError, ValueError):
    """Raised for region parameters outside their domain"""
    pass


class TransformError(TilingError, ValueError):
    """Raised when a rigid motion would leave the nonnegative quadrant"""
    pass


class ConstructionError(TilingError, ValueError):
    """Raised for bad construction arguments or induction inputs"""
    pass


class RenderError(TilingError, ValueError):
    """Raised when a tiling cannot be rendered in the requested format"""
    pass


class DocumentError(TilingError, ValueError):
    """Raised when a tiling document cannot be parsed"""

    def __init__(self, message: str, field: Optional[str] = None, line: Optional[int] = None):
        self.message = message
        self.field = field
        self.line = line
        context = []
        if line is not None:
            context.append(f"line {line}")
        if field:
            context.append(f"field '{field}'")
        prefix = f"{', '.join(context)}: " if context else ""
        super().__init__(f"{prefix}{message}")


class SearchAborted(TilingError):
    """Raised when an exhaustive search hits its node or time limit"""

    def __init__(self, result):
        self.result = result
        super().__init__(
            f"Search aborted after {result.nodes_expanded} nodes ({result.abort_reason} limit)"
        )
