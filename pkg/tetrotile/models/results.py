from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Tuple

from pydantic import BaseModel, Field, model_validator

from tetrotile.core.config import settings
from tetrotile.models.grid import Cell, Tiling


class VerificationReport(BaseModel):
    """Outcome of checking a tiling against its region"""
    valid: bool = Field(description="True iff the pieces cover the region exactly with legal shapes")
    cells_total: int = Field(ge=0, description="Number of cells in the region")
    cells_covered: int = Field(ge=0, description="Region cells covered by at least one piece")
    overlaps: List[Cell] = Field(default_factory=list, description="Cells covered more than once")
    gaps: List[Cell] = Field(default_factory=list, description="Region cells left uncovered")
    bad_pieces: List[Tuple[int, str]] = Field(
        default_factory=list,
        description="(piece index, reason); monominoes are indexed after the tetrominoes",
    )
    t_count: int = Field(ge=0)
    mono_count: int = Field(ge=0)

    def summary(self) -> str:
        status = "valid" if self.valid else "INVALID"
        return (
            f"{status}: {self.t_count} T-tetrominoes, {self.mono_count} monominoes, "
            f"{self.cells_covered}/{self.cells_total} cells covered, "
            f"{len(self.overlaps)} overlaps, {len(self.gaps)} gaps, {len(self.bad_pieces)} bad pieces"
        )


class SquareSummary(BaseModel):
    """Closed-form optimum for the n x n square"""
    n: int = Field(ge=1)
    max_t: int = Field(ge=0)
    min_mono: int = Field(ge=0)
    residue: int = Field(ge=0, le=3)

    @model_validator(mode="after")
    def check_area(self) -> "SquareSummary":
        if 4 * self.max_t + self.min_mono != self.n * self.n:
            raise ValueError("4 * max_t + min_mono must equal n^2")
        return self


class SearchLimits(BaseModel):
    """Node and wall-clock budget for one search"""
    max_nodes: int = Field(default_factory=lambda: settings.max_nodes, ge=1)
    max_seconds: float = Field(default_factory=lambda: settings.max_seconds, gt=0)


class SearchStatus(str, Enum):
    FOUND = "found"
    INFEASIBLE = "infeasible"
    ABORTED = "aborted"


@dataclass(frozen=True)
class SearchResult:
    """Outcome of an exact-cover feasibility search"""
    status: SearchStatus
    nodes_expanded: int
    elapsed: float
    tiling: Optional[Tiling] = None
    abort_reason: Optional[str] = None  # "nodes" or "time"

    @property
    def found(self) -> bool:
        return self.status is SearchStatus.FOUND

    def to_dict(self) -> dict:
        """Deterministic fields only; elapsed time is left out"""
        data = {"status": self.status.value, "nodes_expanded": self.nodes_expanded}
        if self.abort_reason is not None:
            data["abort_reason"] = self.abort_reason
        return data


class CountResult(BaseModel):
    """Number of exact covers, raw and up to the region's symmetries"""
    raw: int = Field(ge=0)
    orbits: Optional[int] = Field(default=None, ge=0)
    nodes_expanded: int = Field(ge=0)


@dataclass(frozen=True)
class MinimumResult:
    """Smallest feasible monomino budget for a square and the searches behind it"""
    n: int
    min_monominoes: int
    attempts: Tuple[SearchResult, ...]

    @property
    def nodes_expanded(self) -> int:
        return sum(attempt.nodes_expanded for attempt in self.attempts)

    @property
    def tiling(self) -> Optional[Tiling]:
        return self.attempts[-1].tiling

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "min_monominoes": self.min_monominoes,
            "max_tetrominoes": (self.n * self.n - self.min_monominoes) // 4,
            "nodes_expanded": self.nodes_expanded,
        }
