from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from tetrotile.models.grid import Axis


class StepKind(str, Enum):
    """One step of a constructive tiling"""
    SINGLE_CELL = "single_cell"        # the 1x1 square as one monomino
    BASE_4X4 = "base_4x4"              # (m,): m x m array of 4x4 pinwheels
    BASE_A3 = "base_a3"
    BASE_A5 = "base_a5"
    EXTEND_L = "extend_l"              # (m,): shift up two rows, add the 4 strip monominoes
    FRIEZE_REPEAT = "frieze_repeat"    # (length,): fill both strip arms from the frieze
    EXTEND_ONES = "extend_ones"        # (k,): A_{4k+1} -> mirrored A_{4k+3}
    EXTEND_THREES = "extend_threes"    # (k,): A_{4k+3} -> mirrored A_{4k+5}
    REFLECT = "reflect"                # mirror about `axis`
    FILL_CORNERS = "fill_corners"      # A_n -> square with the four removed cells as monominoes


@dataclass(frozen=True)
class ConstructionStep:
    kind: StepKind
    params: Tuple[int, ...] = ()
    axis: Optional[Axis] = None

    def to_dict(self) -> dict:
        data = {"kind": self.kind.value, "params": list(self.params)}
        if self.axis is not None:
            data["axis"] = self.axis.value
        return data


@dataclass(frozen=True)
class ConstructionTrace:
    """Audit trail of a construction; replaying it reproduces the tiling"""
    steps: Tuple[ConstructionStep, ...] = ()

    def __len__(self) -> int:
        return len(self.steps)

    def extended(self, *steps: ConstructionStep) -> "ConstructionTrace":
        return ConstructionTrace(self.steps + tuple(steps))

    def kinds(self) -> Tuple[StepKind, ...]:
        return tuple(step.kind for step in self.steps)
