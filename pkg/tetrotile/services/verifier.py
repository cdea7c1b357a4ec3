import logging
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from typing import Iterable, List, Optional

from tetrotile.core.exceptions import InvalidPieceError
from tetrotile.models.grid import Cell, Tiling, recognize
from tetrotile.models.results import VerificationReport

logger = logging.getLogger(__name__)

__all__ = ["verify", "verify_many", "is_t_shape"]


def is_t_shape(cells: Iterable[Cell]) -> bool:
    """True iff the cells are a 3-cell bar plus one stem cell on the bar's middle"""
    try:
        recognize(cells)
    except (InvalidPieceError, TypeError, ValueError):
        return False
    return True


def verify(tiling: Tiling) -> VerificationReport:
    """
    Check a tiling against its region using only the placed cells.

    Every defect is reported, not just the first one.

    Args:
        tiling: Tiling to check

    Returns:
        VerificationReport with overlaps, gaps and bad pieces listed in sorted order
    """
    region_cells = tiling.region.cells
    coverage: Counter = Counter()
    bad_pieces = []

    for index, piece in enumerate(tiling.tetrominoes):
        if not is_t_shape(piece.cells):
            bad_pieces.append((index, "cells do not form a T-tetromino"))
        for cell in piece.cells:
            coverage[cell] += 1
            if cell not in region_cells:
                bad_pieces.append((index, f"cell ({cell.row}, {cell.col}) lies outside the region"))

    offset = len(tiling.tetrominoes)
    for index, cell in enumerate(tiling.monominoes, start=offset):
        coverage[cell] += 1
        if cell not in region_cells:
            bad_pieces.append((index, f"cell ({cell.row}, {cell.col}) lies outside the region"))

    overlaps = sorted(cell for cell, count in coverage.items() if count > 1)
    gaps = sorted(region_cells.difference(coverage))
    cells_covered = len(region_cells) - len(gaps)
    t_count = len(tiling.tetrominoes)
    mono_count = len(tiling.monominoes)

    valid = (
        not overlaps
        and not gaps
        and not bad_pieces
        and 4 * t_count + mono_count == len(region_cells)
    )
    if not valid:
        logger.debug(
            "Tiling of %r failed verification: %d overlaps, %d gaps, %d bad pieces",
            tiling.region, len(overlaps), len(gaps), len(bad_pieces),
        )

    return VerificationReport(
        valid=valid,
        cells_total=len(region_cells),
        cells_covered=cells_covered,
        overlaps=overlaps,
        gaps=gaps,
        bad_pieces=bad_pieces,
        t_count=t_count,
        mono_count=mono_count,
    )


def verify_many(tilings: Iterable[Tiling], workers: Optional[int] = None) -> List[VerificationReport]:
    """Verify a batch of tilings; results come back in input order"""
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(verify, tilings))
