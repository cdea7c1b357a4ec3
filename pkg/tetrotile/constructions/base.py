import logging
from typing import Callable, Dict, Iterable, Optional

import numpy as np

from tetrotile.constructions import gadgets
from tetrotile.core.exceptions import ConstructionError
from tetrotile.models.grid import Axis, Bounds, Region, RegionKind, Tiling, reflect_region, transform_array
from tetrotile.models.trace import ConstructionStep, ConstructionTrace, StepKind

logger = logging.getLogger(__name__)

__all__ = ["PieceBuilder", "replay_trace", "frieze_array", "ones_ring_array", "threes_ring_array"]


class PieceBuilder:
    """
    Tiling under construction, held as numpy cell arrays.

    Every mutation is a ConstructionStep, so the recorded trace replays to the
    same tiling. Pieces stay in arrays until build(), which materializes the
    Tiling once.
    """

    def __init__(self):
        self.size = 0
        self.kind: Optional[RegionKind] = None
        # Mirror axis of the current A_n copy, None when canonical
        self.mirror: Optional[Axis] = None
        self._tetrominoes = np.empty((0, 4, 2), dtype=np.int64)
        self._monominoes = np.empty((0, 2), dtype=np.int64)
        self.trace = ConstructionTrace()
        self._handlers: Dict[StepKind, Callable[[ConstructionStep], None]] = {
            StepKind.SINGLE_CELL: self._single_cell,
            StepKind.BASE_4X4: self._base_4x4,
            StepKind.BASE_A3: self._base_a3,
            StepKind.BASE_A5: self._base_a5,
            StepKind.EXTEND_L: self._extend_l,
            StepKind.FRIEZE_REPEAT: self._frieze_repeat,
            StepKind.EXTEND_ONES: self._extend_ones,
            StepKind.EXTEND_THREES: self._extend_threes,
            StepKind.REFLECT: self._reflect,
            StepKind.FILL_CORNERS: self._fill_corners,
        }

    @classmethod
    def from_tiling(cls, tiling: Tiling) -> "PieceBuilder":
        """Seed a builder with an existing canonical A_n tiling"""
        builder = cls()
        if tiling.region.kind is not RegionKind.AN:
            raise ConstructionError(f"Expected a canonical A_n tiling, got {tiling.region!r}")
        builder.size = tiling.region.n
        builder.kind = RegionKind.AN
        builder._tetrominoes, builder._monominoes = tiling.to_arrays()
        if tiling.trace is not None:
            builder.trace = tiling.trace
        return builder

    def apply(self, step: ConstructionStep) -> "PieceBuilder":
        logger.debug("Applying %s%s at size %d", step.kind.value, step.params, self.size)
        self._handlers[step.kind](step)
        self.trace = self.trace.extended(step)
        return self

    def apply_all(self, steps: Iterable[ConstructionStep]) -> "PieceBuilder":
        for step in steps:
            self.apply(step)
        return self

    def region(self) -> Region:
        if self.kind is RegionKind.SQUARE:
            return Region.square(self.size)
        if self.kind is RegionKind.LSTRIP:
            return Region.l_strip(self.size, self.size - 2)
        if self.kind is RegionKind.AN:
            region = Region.a_n(self.size)
            return reflect_region(region, self.mirror) if self.mirror else region
        raise ConstructionError("Builder holds no region yet")

    def build(self) -> Tiling:
        return Tiling.from_arrays(self.region(), self._tetrominoes, self._monominoes, trace=self.trace)

    # Array helpers

    def _add(self, tetrominoes: Optional[np.ndarray] = None, monominoes=None) -> None:
        if tetrominoes is not None and len(tetrominoes):
            self._tetrominoes = np.concatenate([self._tetrominoes, tetrominoes.reshape(-1, 4, 2)])
        if monominoes is not None and len(monominoes):
            monos = np.asarray(monominoes, dtype=np.int64).reshape(-1, 2)
            self._monominoes = np.concatenate([self._monominoes, monos])

    def _shift(self, dr: int, dc: int) -> None:
        offset = np.array([dr, dc], dtype=np.int64)
        self._tetrominoes = self._tetrominoes + offset
        self._monominoes = self._monominoes + offset

    def _require(self, kind: Optional[RegionKind], size: Optional[int], step: ConstructionStep) -> None:
        if self.kind is not kind or (size is not None and self.size != size) or self.mirror is not None:
            raise ConstructionError(
                f"Step {step.kind.value}{step.params} does not apply to "
                f"{self.kind.value if self.kind else 'empty'} state of size {self.size}"
            )

    # Step handlers

    def _single_cell(self, step: ConstructionStep) -> None:
        self._require(None, 0, step)
        self._add(monominoes=[(0, 0)])
        self.size, self.kind = 1, RegionKind.SQUARE

    def _base_4x4(self, step: ConstructionStep) -> None:
        (m,) = step.params
        if m < 1:
            raise ConstructionError(f"Pinwheel grid needs m >= 1, got {m}")
        self._require(None, 0, step)
        block = gadgets.table_array(gadgets.PINWHEEL)
        offsets = np.array(
            [(4 * i, 4 * j) for i in range(m) for j in range(m)], dtype=np.int64
        ).reshape(-1, 1, 1, 2)
        self._add(tetrominoes=(block[np.newaxis] + offsets).reshape(-1, 4, 2))
        self.size, self.kind = 4 * m, RegionKind.SQUARE

    def _base_a3(self, step: ConstructionStep) -> None:
        self._require(None, 0, step)
        self._add(gadgets.table_array(gadgets.A3_TETROMINOES), gadgets.A3_MONOMINOES)
        self.size, self.kind = 3, RegionKind.AN

    def _base_a5(self, step: ConstructionStep) -> None:
        self._require(None, 0, step)
        self._add(gadgets.table_array(gadgets.A5_TETROMINOES), gadgets.A5_MONOMINOES)
        self.size, self.kind = 5, RegionKind.AN

    def _extend_l(self, step: ConstructionStep) -> None:
        (m,) = step.params
        if m < 0:
            raise ConstructionError(f"L-strip needs m >= 0, got {m}")
        outer = 4 * m + 2
        if self.kind is RegionKind.SQUARE and self.size == 4 * m:
            kind = RegionKind.SQUARE
        elif self.kind is None and self.size == 0:
            kind = RegionKind.SQUARE if m == 0 else RegionKind.LSTRIP
        else:
            raise ConstructionError(f"Cannot wrap an L-strip of side {outer} around size {self.size}")
        # Inner square moves to rows 2..outer-1, cols 0..4m-1
        self._shift(2, 0)
        self._add(monominoes=[(0, 0), (0, 1), (1, 0), (outer - 1, outer - 1)])
        self.size, self.kind = outer, kind

    def _frieze_repeat(self, step: ConstructionStep) -> None:
        (length,) = step.params
        if self.kind not in (RegionKind.SQUARE, RegionKind.LSTRIP) or self.size != length + 2:
            raise ConstructionError(f"Frieze arms of length {length} do not fit side {self.size}")
        arm = frieze_array(length)
        if not len(arm):
            return
        # Bottom arm: row 1 holds cols 1..4m, row 0 holds cols 2..4m+1
        bottom = arm + np.array([0, 1], dtype=np.int64)
        # Right arm: frieze row 1 becomes the outer col 4m+1, frieze col c becomes row c+1
        right = arm[..., ::-1] + np.array([1, length], dtype=np.int64)
        self._add(tetrominoes=np.concatenate([bottom, right]))

    def _extend_ones(self, step: ConstructionStep) -> None:
        (k,) = step.params
        if k < 1:
            raise ConstructionError(f"extend_ones needs k >= 1, got {k}")
        self._require(RegionKind.AN, 4 * k + 1, step)
        self._shift(*gadgets.ONES_OFFSET)
        self._add(tetrominoes=ones_ring_array(k))
        self.size = 4 * k + 3
        self.mirror = Axis.MAIN_DIAGONAL

    def _extend_threes(self, step: ConstructionStep) -> None:
        (k,) = step.params
        if k < 0:
            raise ConstructionError(f"extend_threes needs k >= 0, got {k}")
        self._require(RegionKind.AN, 4 * k + 3, step)
        self._shift(*gadgets.THREES_OFFSET)
        self._add(tetrominoes=threes_ring_array(k))
        self.size = 4 * k + 5
        self.mirror = Axis.ANTI_DIAGONAL

    def _reflect(self, step: ConstructionStep) -> None:
        if step.axis is None or self.kind is None:
            raise ConstructionError("Reflect step needs an axis and a non-empty state")
        bounds = Bounds(0, self.size - 1, 0, self.size - 1)
        self._tetrominoes = transform_array(self._tetrominoes, step.axis, bounds)
        self._monominoes = transform_array(self._monominoes, step.axis, bounds)
        if self.kind is RegionKind.AN:
            if self.mirror is None:
                self.mirror = step.axis
            elif self.mirror is step.axis:
                self.mirror = None
            else:
                raise ConstructionError(
                    f"Reflecting a {self.mirror.value} mirror about {step.axis.value} is not tracked"
                )
        elif self.kind is RegionKind.LSTRIP:
            raise ConstructionError("L-strip tilings are only built in canonical position")

    def _fill_corners(self, step: ConstructionStep) -> None:
        self._require(RegionKind.AN, None, step)
        n = self.size
        self._add(monominoes=[(0, 0), (0, 1), (1, 0), (0, n - 1)])
        self.kind = RegionKind.SQUARE


def frieze_array(length: int) -> np.ndarray:
    """(length // 2, 4, 2) array of frieze T's; row 1 holds cols 0..length-1"""
    if length < 0 or length % gadgets.FRIEZE_PERIOD:
        raise ConstructionError(f"Frieze length must be a nonnegative multiple of 4, got {length}")
    unit = gadgets.table_array(gadgets.FRIEZE_UNIT)
    repeats = length // gadgets.FRIEZE_PERIOD
    offsets = np.array(
        [(0, gadgets.FRIEZE_PERIOD * i) for i in range(repeats)], dtype=np.int64
    ).reshape(-1, 1, 1, 2)
    return (unit[np.newaxis] + offsets).reshape(-1, 4, 2)


def _repeat_units(dashed: np.ndarray, steps: np.ndarray, count: int) -> np.ndarray:
    """Copies of each dashed piece shifted by j * step, j = 0..count-1"""
    if count <= 0:
        return np.empty((0, 4, 2), dtype=np.int64)
    copies = [dashed + (j * steps)[:, np.newaxis, :] for j in range(count)]
    return np.concatenate(copies)


def ones_ring_array(k: int) -> np.ndarray:
    """
    T's of the ring around A_{4k+1} (placed at offset (2, 2)) in the
    main-diagonal mirror of A_{4k+3}. Four solid pieces sit on the far
    ends of the arms and move with n; the dashed unit repeats k-1 times.
    """
    n = 4 * k + 3
    shift = n - 11
    solid = gadgets.table_array(gadgets.ONES_SOLID_11)
    # pieces 0, 4 and 5 sit at the far end of an arm
    solid_shift = np.array([(shift, 0), (0, 0), (0, 0), (0, 0), (0, shift), (0, shift)], dtype=np.int64)
    solid = solid + solid_shift[:, np.newaxis, :]
    # dashed unit as drawn is the j = 0 copy; left arm moves up, bottom arm right
    dashed = gadgets.table_array(gadgets.ONES_DASHED_11)
    unit_step = np.array([(4, 0), (4, 0), (0, 4), (0, 4)], dtype=np.int64)
    return np.concatenate([solid, _repeat_units(dashed, unit_step, k - 1)])


def threes_ring_array(k: int) -> np.ndarray:
    """
    T's of the ring around A_{4k+3} (placed at offset (2, 0)) in the
    anti-diagonal mirror of A_{4k+5}. The dashed unit repeats k times.
    """
    n = 4 * k + 5
    shift = n - 9
    solid = gadgets.table_array(gadgets.THREES_SOLID_9)
    solid_shift = np.array([(0, 0), (0, 0), (0, shift), (0, shift)], dtype=np.int64)
    solid = solid + solid_shift[:, np.newaxis, :]
    # the drawn dashed pieces sit against the fixed corner; the right-arm pair
    # also moves right with n
    dashed = gadgets.table_array(gadgets.THREES_DASHED_9)
    dashed = dashed + np.array([(0, 0), (0, 0), (0, shift), (0, shift)], dtype=np.int64)[:, np.newaxis, :]
    unit_step = np.array([(0, 4), (0, 4), (4, 0), (4, 0)], dtype=np.int64)
    return np.concatenate([solid, _repeat_units(dashed, unit_step, k)])


def replay_trace(trace: ConstructionTrace) -> Tiling:
    """Rebuild a tiling from its construction trace"""
    return PieceBuilder().apply_all(trace.steps).build()
