"""
Inductive one-monomino tilings of A_n, the odd square with the cells
(0,0), (0,1), (1,0) and (0,n-1) removed.

Each induction step wraps a ring of T's around the current tiling. The ring
for n = 4k+1 yields the main-diagonal mirror of A_{n+2}, the ring for
n = 4k+3 the anti-diagonal mirror; a reflection about the same axis brings
the result back to canonical position before the next step.
"""

import logging
from typing import List

from tetrotile.constructions.base import PieceBuilder
from tetrotile.core.exceptions import ConstructionError
from tetrotile.models.grid import Axis, RegionKind, Tiling
from tetrotile.models.trace import ConstructionStep, StepKind
from tetrotile.services.verifier import verify

logger = logging.getLogger(__name__)


def induction_steps(n: int) -> List[ConstructionStep]:
    steps = [ConstructionStep(StepKind.BASE_A3 if n == 3 else StepKind.BASE_A5)]
    for current in range(5, n, 2):
        if current % 4 == 1:
            steps.append(ConstructionStep(StepKind.EXTEND_ONES, ((current - 1) // 4,)))
            steps.append(ConstructionStep(StepKind.REFLECT, axis=Axis.MAIN_DIAGONAL))
        else:
            steps.append(ConstructionStep(StepKind.EXTEND_THREES, ((current - 3) // 4,)))
            steps.append(ConstructionStep(StepKind.REFLECT, axis=Axis.ANTI_DIAGONAL))
    return steps


def check_odd_side(n: int) -> None:
    if n < 3 or n % 2 == 0:
        raise ConstructionError(f"n must be odd and at least 3, got {n}")


def tile_A(n: int) -> Tiling:
    """
    Tile the canonical A_n with m^2 + m - 1 T's and one monomino, m = (n-1)/2.

    Args:
        n: Odd side length, at least 3

    Returns:
        Tiling of Region.a_n(n) carrying its construction trace

    Raises:
        ConstructionError: If n is even or less than 3
    """
    check_odd_side(n)
    logger.debug("Building A_%d", n)
    return PieceBuilder().apply_all(induction_steps(n)).build()


def _extend(tiling: Tiling, residue: int, kind: StepKind) -> Tiling:
    region = tiling.region
    if region.kind is not RegionKind.AN or region.n % 4 != residue:
        raise ConstructionError(
            f"{kind.value} needs a tiling of the canonical A_n with n = {residue} mod 4, got {region!r}"
        )
    report = verify(tiling)
    if not report.valid:
        raise ConstructionError(f"Input tiling is not valid: {report.summary()}")

    k = (region.n - residue) // 4
    extended = PieceBuilder.from_tiling(tiling).apply(ConstructionStep(kind, (k,))).build()
    # A trace without its base steps would not replay
    return extended if tiling.trace is not None else extended.with_trace(None)


def extend_A_ones(tiling: Tiling) -> Tiling:
    """
    Grow a tiling of A_{4k+1} (k >= 1) into a tiling of the main-diagonal
    mirror of A_{4k+3}, adding 4k+2 T's and no monomino.

    Raises:
        ConstructionError: If the input is invalid, not a canonical A_n or has the wrong residue
    """
    return _extend(tiling, 1, StepKind.EXTEND_ONES)


def extend_A_threes(tiling: Tiling) -> Tiling:
    """
    Grow a tiling of A_{4k+3} (k >= 0) into a tiling of the anti-diagonal
    mirror of A_{4k+5}, adding 4k+4 T's and no monomino.

    Raises:
        ConstructionError: If the input is invalid, not a canonical A_n or has the wrong residue
    """
    return _extend(tiling, 3, StepKind.EXTEND_THREES)
