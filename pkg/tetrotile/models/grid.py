"""
Cells, T-tetromino placements, regions and tilings.

Coordinates are (row, col) with row 0 at the bottom, so "up" means increasing
row. All types are immutable; transforms return new objects.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import TYPE_CHECKING, FrozenSet, Iterable, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from tetrotile.core.exceptions import InvalidPieceError, RegionError, TransformError

if TYPE_CHECKING:
    from tetrotile.models.trace import ConstructionTrace

__all__ = [
    "Cell",
    "Orientation",
    "Axis",
    "RegionKind",
    "Bounds",
    "TPlacement",
    "Region",
    "Tiling",
    "t_cells",
    "recognize",
    "transform_array",
    "reflect_region",
    "reflect_tiling",
    "translate_tiling",
    "rotate_tiling",
    "dihedral_images",
    "DIHEDRAL_GROUP",
]


class Cell(NamedTuple):
    """A lattice square"""
    row: int
    col: int


class Orientation(str, Enum):
    """Direction the stem of a T points, relative to its 3-cell bar"""
    STEM_UP = "stem_up"
    STEM_DOWN = "stem_down"
    STEM_LEFT = "stem_left"
    STEM_RIGHT = "stem_right"

    @property
    def horizontal_bar(self) -> bool:
        return self in (Orientation.STEM_UP, Orientation.STEM_DOWN)

    def reflected(self, axis: "Axis") -> "Orientation":
        """Orientation of the mirror image of a T with this orientation"""
        return _ORIENTATION_MIRRORS[axis][self]


class Axis(str, Enum):
    """Mirror axes of a bounding box"""
    HORIZONTAL = "horizontal"        # row -> top + bottom - row
    VERTICAL = "vertical"            # col -> left + right - col
    MAIN_DIAGONAL = "main_diagonal"  # (row, col) -> (col, row)
    ANTI_DIAGONAL = "anti_diagonal"  # (row, col) -> (N-1-col, N-1-row)


_ORIENTATION_MIRRORS = {
    Axis.HORIZONTAL: {
        Orientation.STEM_UP: Orientation.STEM_DOWN,
        Orientation.STEM_DOWN: Orientation.STEM_UP,
        Orientation.STEM_LEFT: Orientation.STEM_LEFT,
        Orientation.STEM_RIGHT: Orientation.STEM_RIGHT,
    },
    Axis.VERTICAL: {
        Orientation.STEM_UP: Orientation.STEM_UP,
        Orientation.STEM_DOWN: Orientation.STEM_DOWN,
        Orientation.STEM_LEFT: Orientation.STEM_RIGHT,
        Orientation.STEM_RIGHT: Orientation.STEM_LEFT,
    },
    Axis.MAIN_DIAGONAL: {
        Orientation.STEM_UP: Orientation.STEM_RIGHT,
        Orientation.STEM_RIGHT: Orientation.STEM_UP,
        Orientation.STEM_DOWN: Orientation.STEM_LEFT,
        Orientation.STEM_LEFT: Orientation.STEM_DOWN,
    },
    Axis.ANTI_DIAGONAL: {
        Orientation.STEM_UP: Orientation.STEM_LEFT,
        Orientation.STEM_LEFT: Orientation.STEM_UP,
        Orientation.STEM_DOWN: Orientation.STEM_RIGHT,
        Orientation.STEM_RIGHT: Orientation.STEM_DOWN,
    },
}

# The eight symmetries of a square box, each as a sequence of reflections.
DIHEDRAL_GROUP: Tuple[Tuple[Axis, ...], ...] = (
    (),
    (Axis.HORIZONTAL,),
    (Axis.VERTICAL,),
    (Axis.HORIZONTAL, Axis.VERTICAL),
    (Axis.MAIN_DIAGONAL,),
    (Axis.ANTI_DIAGONAL,),
    (Axis.MAIN_DIAGONAL, Axis.HORIZONTAL),
    (Axis.MAIN_DIAGONAL, Axis.VERTICAL),
)


class Bounds(NamedTuple):
    """Inclusive bounding box of a cell set"""
    min_row: int
    max_row: int
    min_col: int
    max_col: int

    @property
    def height(self) -> int:
        return self.max_row - self.min_row + 1

    @property
    def width(self) -> int:
        return self.max_col - self.min_col + 1

    @property
    def is_square(self) -> bool:
        return self.height == self.width


def t_cells(bar_start: Cell, orientation: Orientation) -> FrozenSet[Cell]:
    """
    The four cells of a T whose bar begins at bar_start.

    Horizontal bars extend towards increasing col, vertical bars towards
    increasing row; the stem hangs off the middle bar cell.
    """
    r, c = bar_start
    if orientation is Orientation.STEM_UP:
        return frozenset((Cell(r, c), Cell(r, c + 1), Cell(r, c + 2), Cell(r + 1, c + 1)))
    if orientation is Orientation.STEM_DOWN:
        return frozenset((Cell(r, c), Cell(r, c + 1), Cell(r, c + 2), Cell(r - 1, c + 1)))
    if orientation is Orientation.STEM_LEFT:
        return frozenset((Cell(r, c), Cell(r + 1, c), Cell(r + 2, c), Cell(r + 1, c - 1)))
    return frozenset((Cell(r, c), Cell(r + 1, c), Cell(r + 2, c), Cell(r + 1, c + 1)))


def recognize(cells: Iterable[Cell]) -> Tuple[Cell, Orientation]:
    """
    Recover (bar_start, orientation) from the cells of a T.

    Raises:
        InvalidPieceError: If the cells do not form a T-tetromino
    """
    cell_set = {Cell(*cell) for cell in cells}
    if len(cell_set) != 4:
        raise InvalidPieceError(f"A T-tetromino has 4 distinct cells, got {len(cell_set)}")

    for cell in cell_set:
        r, c = cell
        if Cell(r, c + 1) in cell_set and Cell(r, c + 2) in cell_set:
            if Cell(r + 1, c + 1) in cell_set:
                return cell, Orientation.STEM_UP
            if Cell(r - 1, c + 1) in cell_set:
                return cell, Orientation.STEM_DOWN
        if Cell(r + 1, c) in cell_set and Cell(r + 2, c) in cell_set:
            if Cell(r + 1, c - 1) in cell_set:
                return cell, Orientation.STEM_LEFT
            if Cell(r + 1, c + 1) in cell_set:
                return cell, Orientation.STEM_RIGHT
    raise InvalidPieceError(f"Cells {sorted(cell_set)} do not form a T-tetromino")


@dataclass(frozen=True, order=True)
class TPlacement:
    """
    One T-tetromino, stored as its sorted 4-cell tuple.

    The constructor only normalizes and checks for 4 distinct cells so that
    documents with malformed pieces can still be loaded and reported on by the
    verifier. Use from_cells or from_bar for shape-checked placements.
    """
    cells: Tuple[Cell, ...]

    def __post_init__(self):
        normalized = tuple(sorted(Cell(*cell) for cell in self.cells))
        if len(normalized) != 4 or len(set(normalized)) != 4:
            raise InvalidPieceError(f"A T-tetromino has 4 distinct cells, got {list(self.cells)}")
        object.__setattr__(self, "cells", normalized)

    @classmethod
    def from_bar(cls, bar_start: Cell, orientation: Orientation) -> "TPlacement":
        return cls(tuple(t_cells(Cell(*bar_start), orientation)))

    @classmethod
    def from_cells(cls, cells: Iterable[Cell]) -> "TPlacement":
        cells = tuple(cells)
        recognize(cells)
        return cls(cells)

    @property
    def bar_start(self) -> Cell:
        return recognize(self.cells)[0]

    @property
    def orientation(self) -> Orientation:
        return recognize(self.cells)[1]

    @property
    def cell_set(self) -> FrozenSet[Cell]:
        return frozenset(self.cells)

    def translated(self, dr: int, dc: int) -> "TPlacement":
        return TPlacement(tuple(Cell(r + dr, c + dc) for r, c in self.cells))


def _bounds_of(cells: Iterable[Cell]) -> Bounds:
    rows = [cell[0] for cell in cells]
    cols = [cell[1] for cell in cells]
    if not rows:
        return Bounds(0, -1, 0, -1)
    return Bounds(min(rows), max(rows), min(cols), max(cols))


class RegionKind(str, Enum):
    """How a region was defined"""
    SQUARE = "square"
    AN = "an"
    LSTRIP = "lstrip"
    EXPLICIT = "explicit"


@dataclass(frozen=True)
class Region:
    """
    A finite set of cells to be covered.

    Square(n) is rows/cols 0..n-1. AN(n) is Square(n) without
    (0,0), (0,1), (1,0) and (0,n-1). LStrip(outer, inner) is Square(outer)
    without the inner square at rows 2..outer-1, cols 0..inner-1.
    """
    kind: RegionKind
    cells: FrozenSet[Cell]
    n: Optional[int] = None
    inner: Optional[int] = None

    @classmethod
    def square(cls, n: int) -> "Region":
        if n < 1:
            raise RegionError(f"Square side must be positive, got {n}")
        cells = frozenset(Cell(r, c) for r in range(n) for c in range(n))
        return cls(RegionKind.SQUARE, cells, n=n)

    @classmethod
    def a_n(cls, n: int) -> "Region":
        if n < 3 or n % 2 == 0:
            raise RegionError(f"A_n requires odd n >= 3, got {n}")
        removed = a_n_removed_cells(n)
        cells = frozenset(
            Cell(r, c) for r in range(n) for c in range(n) if Cell(r, c) not in removed
        )
        return cls(RegionKind.AN, cells, n=n)

    @classmethod
    def l_strip(cls, outer: int, inner: int) -> "Region":
        if inner < 0 or outer != inner + 2:
            raise RegionError(f"L-strip requires outer = inner + 2, got outer={outer}, inner={inner}")
        cells = frozenset(
            Cell(r, c)
            for r in range(outer)
            for c in range(outer)
            if not (r >= 2 and c < inner)
        )
        return cls(RegionKind.LSTRIP, cells, n=outer, inner=inner)

    @classmethod
    def explicit(cls, cells: Iterable[Cell]) -> "Region":
        return cls(RegionKind.EXPLICIT, frozenset(Cell(*cell) for cell in cells))

    @classmethod
    def identify(cls, cells: Iterable[Cell]) -> "Region":
        """Build a region from a cell set, naming its kind when it is a canonical one"""
        cells = frozenset(Cell(*cell) for cell in cells)
        bounds = _bounds_of(cells)
        if cells and bounds.min_row == 0 and bounds.min_col == 0 and bounds.is_square:
            n = bounds.height
            if len(cells) == n * n:
                return cls(RegionKind.SQUARE, cells, n=n)
            if n >= 3 and n % 2 == 1 and len(cells) == n * n - 4 and cells == cls.a_n(n).cells:
                return cls(RegionKind.AN, cells, n=n)
            if n >= 3 and len(cells) == 4 * n - 4 and cells == cls.l_strip(n, n - 2).cells:
                return cls(RegionKind.LSTRIP, cells, n=n, inner=n - 2)
        return cls(RegionKind.EXPLICIT, cells)

    @property
    def bounds(self) -> Bounds:
        if self.n is not None:
            return Bounds(0, self.n - 1, 0, self.n - 1)
        return _bounds_of(self.cells)

    @property
    def size(self) -> int:
        return len(self.cells)

    def sorted_cells(self) -> Tuple[Cell, ...]:
        return tuple(sorted(self.cells))

    def __repr__(self) -> str:
        if self.kind is RegionKind.SQUARE:
            return f"Region.square({self.n})"
        if self.kind is RegionKind.AN:
            return f"Region.a_n({self.n})"
        if self.kind is RegionKind.LSTRIP:
            return f"Region.l_strip({self.n}, {self.inner})"
        return f"Region.explicit(<{len(self.cells)} cells>)"


def a_n_removed_cells(n: int) -> FrozenSet[Cell]:
    return frozenset((Cell(0, 0), Cell(0, 1), Cell(1, 0), Cell(0, n - 1)))


@dataclass(frozen=True)
class Tiling:
    """
    A region with disjoint T-placements and monomino cells.

    Pieces are kept in canonical order: tetrominoes by their sorted cell
    tuples, monominoes by (row, col). The trace does not take part in equality.
    """
    region: Region
    tetrominoes: Tuple[TPlacement, ...] = ()
    monominoes: Tuple[Cell, ...] = ()
    trace: Optional["ConstructionTrace"] = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "tetrominoes", tuple(sorted(self.tetrominoes)))
        object.__setattr__(self, "monominoes", tuple(sorted(Cell(*cell) for cell in self.monominoes)))

    @property
    def t_count(self) -> int:
        return len(self.tetrominoes)

    @property
    def mono_count(self) -> int:
        return len(self.monominoes)

    @property
    def piece_count(self) -> int:
        return self.t_count + self.mono_count

    def placed_cells(self) -> Iterable[Cell]:
        for piece in self.tetrominoes:
            yield from piece.cells
        yield from self.monominoes

    def with_trace(self, trace: Optional["ConstructionTrace"]) -> "Tiling":
        return Tiling(self.region, self.tetrominoes, self.monominoes, trace=trace)

    @classmethod
    def from_arrays(
        cls,
        region: Region,
        tetrominoes: np.ndarray,
        monominoes: np.ndarray,
        trace: Optional["ConstructionTrace"] = None,
    ) -> "Tiling":
        """Materialize a tiling from (k, 4, 2) and (j, 2) integer arrays"""
        tets = tuple(
            TPlacement(tuple(Cell(r, c) for r, c in piece))
            for piece in np.asarray(tetrominoes, dtype=np.int64).reshape(-1, 4, 2).tolist()
        )
        monos = tuple(
            Cell(r, c) for r, c in np.asarray(monominoes, dtype=np.int64).reshape(-1, 2).tolist()
        )
        return cls(region, tets, monos, trace=trace)

    def to_arrays(self) -> Tuple[np.ndarray, np.ndarray]:
        tets = np.array([piece.cells for piece in self.tetrominoes], dtype=np.int64).reshape(-1, 4, 2)
        monos = np.array(self.monominoes, dtype=np.int64).reshape(-1, 2)
        return tets, monos


def transform_array(cells: np.ndarray, axis: Axis, bounds: Bounds) -> np.ndarray:
    """
    Mirror an integer array whose last dimension holds (row, col) pairs.

    Raises:
        TransformError: If a diagonal mirror is requested on a non-square box
    """
    cells = np.asarray(cells, dtype=np.int64)
    rows = cells[..., 0]
    cols = cells[..., 1]
    if axis is Axis.HORIZONTAL:
        new_rows, new_cols = bounds.min_row + bounds.max_row - rows, cols
    elif axis is Axis.VERTICAL:
        new_rows, new_cols = rows, bounds.min_col + bounds.max_col - cols
    else:
        if not bounds.is_square:
            raise TransformError(f"Diagonal reflection needs a square bounding box, got {bounds}")
        if axis is Axis.MAIN_DIAGONAL:
            new_rows = bounds.min_row + (cols - bounds.min_col)
            new_cols = bounds.min_col + (rows - bounds.min_row)
        else:
            new_rows = bounds.min_row + (bounds.max_col - cols)
            new_cols = bounds.min_col + (bounds.max_row - rows)
    return np.stack([new_rows, new_cols], axis=-1)


def _cells_to_array(cells: Iterable[Cell]) -> np.ndarray:
    return np.array(list(cells), dtype=np.int64).reshape(-1, 2)


def reflect_region(region: Region, axis: Axis) -> Region:
    bounds = region.bounds
    mirrored = transform_array(_cells_to_array(region.cells), axis, bounds)
    return Region.identify(Cell(r, c) for r, c in mirrored.tolist())


def reflect_tiling(tiling: Tiling, axis: Axis) -> Tiling:
    """Mirror image of a tiling within its region's bounding box"""
    bounds = tiling.region.bounds
    tets, monos = tiling.to_arrays()
    return Tiling.from_arrays(
        reflect_region(tiling.region, axis),
        transform_array(tets, axis, bounds),
        transform_array(monos, axis, bounds),
    )


def rotate_tiling(tiling: Tiling, quarter_turns: int) -> Tiling:
    """Rotate a square-boxed tiling counterclockwise by 90 degrees per turn"""
    result = tiling
    for _ in range(quarter_turns % 4):
        result = reflect_tiling(reflect_tiling(result, Axis.MAIN_DIAGONAL), Axis.VERTICAL)
    return result


def translate_tiling(tiling: Tiling, dr: int, dc: int) -> Tiling:
    """
    Shift every cell of a tiling (and its region) by (dr, dc).

    Raises:
        TransformError: If any cell would get a negative coordinate
    """
    if dr == 0 and dc == 0:
        return tiling
    bounds = tiling.region.bounds
    if tiling.region.cells and (bounds.min_row + dr < 0 or bounds.min_col + dc < 0):
        raise TransformError(f"Translation by ({dr}, {dc}) produces negative coordinates")
    placed = list(tiling.placed_cells())
    if any(r + dr < 0 or c + dc < 0 for r, c in placed):
        raise TransformError(f"Translation by ({dr}, {dc}) produces negative coordinates")

    region = Region.identify(Cell(r + dr, c + dc) for r, c in tiling.region.cells)
    return Tiling(
        region,
        tuple(piece.translated(dr, dc) for piece in tiling.tetrominoes),
        tuple(Cell(r + dr, c + dc) for r, c in tiling.monominoes),
    )


def dihedral_images(cells: Sequence[Cell], bounds: Bounds):
    """
    Yield (axes, image) for each symmetry of the bounding box.

    Non-square boxes only admit the four symmetries without a diagonal mirror.
    """
    array = _cells_to_array(cells)
    for axes in DIHEDRAL_GROUP:
        if not bounds.is_square and any(
            axis in (Axis.MAIN_DIAGONAL, Axis.ANTI_DIAGONAL) for axis in axes
        ):
            continue
        image = array
        for axis in axes:
            image = transform_array(image, axis, bounds)
        yield axes, image
