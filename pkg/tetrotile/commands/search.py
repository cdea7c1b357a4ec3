import logging
from typing import TextIO

from tetrotile.commands.config import EXIT_ABORTED, EXIT_INVALID, EXIT_OK, CliConfig, OutputFormat
from tetrotile.commands.output import write_json, write_tiling
from tetrotile.models.grid import Region, RegionKind
from tetrotile.models.results import SearchStatus
from tetrotile.services.exact_cover import CoverProblem, count_solutions, find_minimum, solve

logger = logging.getLogger(__name__)


def _region(config: CliConfig) -> Region:
    if config.region is RegionKind.AN:
        return Region.a_n(config.n)
    return Region.square(config.n)


def handle_solve(config: CliConfig, stdin: TextIO, out: TextIO, err: TextIO) -> int:
    """
    Feasibility search. JSON output carries status and node count; ascii and
    svg draw the tiling found.
    """
    problem = CoverProblem.build(_region(config), config.budget)
    result = solve(problem, config.limits(), parallel=config.parallel, workers=config.workers)

    if config.format is OutputFormat.JSON or not result.found:
        data = {"n": config.n, "region": config.region.value, "budget": config.budget}
        data.update(result.to_dict())
        if result.found:
            data["t_count"] = result.tiling.t_count
            data["mono_count"] = result.tiling.mono_count
        write_json(out, data)
    else:
        write_tiling(out, result.tiling, config.format)

    if result.status is SearchStatus.ABORTED:
        err.write(f"error: search aborted after {result.nodes_expanded} nodes ({result.abort_reason} limit)\n")
        return EXIT_ABORTED
    if config.expect is not None and result.status is not config.expect:
        err.write(f"error: expected {config.expect.value}, search was {result.status.value}\n")
        return EXIT_INVALID
    return EXIT_OK


def handle_min(config: CliConfig, stdin: TextIO, out: TextIO, err: TextIO) -> int:
    """Least monomino count for the n x n square; aborts propagate as SearchAborted"""
    minimum = find_minimum(config.n, config.limits(), parallel=config.parallel, workers=config.workers)
    write_json(out, minimum.to_dict())
    return EXIT_OK


def handle_count(config: CliConfig, stdin: TextIO, out: TextIO, err: TextIO) -> int:
    problem = CoverProblem.build(_region(config), config.budget)
    counted = count_solutions(problem, config.limits(), symmetry=config.symmetry)
    data = {"n": config.n, "region": config.region.value, "budget": config.budget}
    data.update(counted.model_dump(exclude_none=True))
    write_json(out, data)
    return EXIT_OK
