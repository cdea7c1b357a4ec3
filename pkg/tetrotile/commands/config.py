"""Validated options shared by the command handlers"""

from enum import Enum
from typing import Dict, List, Optional

from pydantic import BaseModel, Field, model_validator

from tetrotile.models.grid import RegionKind
from tetrotile.models.results import SearchLimits, SearchStatus

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_ABORTED = 3


class Command(str, Enum):
    TILE = "tile"
    VERIFY = "verify"
    SOLVE = "solve"
    MIN = "min"
    COUNT = "count"
    SEQUENCE = "sequence"
    RENDER = "render"


class OutputFormat(str, Enum):
    JSON = "json"
    ASCII = "ascii"
    SVG = "svg"
    CSV = "csv"


# Formats each command can write; the first one is the default
FORMATS: Dict[Command, List[OutputFormat]] = {
    Command.TILE: [OutputFormat.JSON, OutputFormat.ASCII, OutputFormat.SVG],
    Command.VERIFY: [OutputFormat.JSON],
    Command.SOLVE: [OutputFormat.JSON, OutputFormat.ASCII, OutputFormat.SVG],
    Command.MIN: [OutputFormat.JSON],
    Command.COUNT: [OutputFormat.JSON],
    Command.SEQUENCE: [OutputFormat.CSV, OutputFormat.JSON],
    Command.RENDER: [OutputFormat.ASCII, OutputFormat.SVG, OutputFormat.JSON],
}
NEEDS_N = {Command.TILE, Command.SOLVE, Command.MIN, Command.COUNT}
NEEDS_INPUT = {Command.VERIFY, Command.RENDER}
SEARCH_REGIONS = {RegionKind.SQUARE, RegionKind.AN}


class CliConfig(BaseModel):
    """Validated command-line request"""
    command: Command
    n: Optional[int] = Field(default=None, ge=1, description="Side length of the square")
    format: Optional[OutputFormat] = None
    region: RegionKind = Field(default=RegionKind.SQUARE, description="Search region: square or an")
    budget: Optional[int] = Field(default=None, ge=0, description="Monomino budget")
    max_nodes: Optional[int] = Field(default=None, ge=1)
    max_seconds: Optional[float] = Field(default=None, gt=0)
    parallel: bool = False
    workers: Optional[int] = Field(default=None, ge=1)
    symmetry: bool = False
    expect: Optional[SearchStatus] = None
    bound: Optional[int] = Field(default=None, ge=1)
    input: Optional[str] = None
    output: str = "-"
    no_trace: bool = False
    verbose: int = Field(default=0, ge=0)

    @model_validator(mode="after")
    def check_command(self) -> "CliConfig":
        allowed = FORMATS[self.command]
        if self.format is None:
            self.format = allowed[0]
        elif self.format not in allowed:
            choices = ", ".join(fmt.value for fmt in allowed)
            raise ValueError(f"{self.command.value} writes {choices}, not {self.format.value}")
        if self.command in NEEDS_N and self.n is None:
            raise ValueError(f"{self.command.value} needs --n")
        if self.command in NEEDS_INPUT and self.input is None:
            raise ValueError(f"{self.command.value} needs --input")
        if self.command in (Command.SOLVE, Command.COUNT) and self.budget is None:
            raise ValueError(f"{self.command.value} needs --budget")
        if self.region not in SEARCH_REGIONS:
            raise ValueError(f"search region must be square or an, got {self.region.value}")
        if self.region is RegionKind.AN and (self.n is None or self.n < 3 or self.n % 2 == 0):
            raise ValueError("an region needs an odd --n of at least 3")
        if self.expect is SearchStatus.ABORTED:
            raise ValueError("--expect takes found or infeasible")
        return self

    def limits(self) -> SearchLimits:
        overrides = {}
        if self.max_nodes is not None:
            overrides["max_nodes"] = self.max_nodes
        if self.max_seconds is not None:
            overrides["max_seconds"] = self.max_seconds
        return SearchLimits(**overrides)


