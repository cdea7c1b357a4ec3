"""
Exhaustive search for tilings of a region by T-tetrominoes and at most a
given number of monominoes.

Region cells are the primary columns of an exact-cover matrix and every T
that fits is a row. Monominoes have no rows: at each node the chosen column
may instead be left to a monomino while the budget lasts. Columns are picked
by fewest remaining candidates, ties going to the lowest cell index, so the
search is deterministic in single-process mode.
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from tetrotile.core.config import settings
from tetrotile.core.exceptions import RegionError, SearchAborted
from tetrotile.models.grid import (
    Axis,
    Bounds,
    Cell,
    Orientation,
    Region,
    Tiling,
    TPlacement,
    dihedral_images,
    t_cells,
    transform_array,
)
from tetrotile.models.results import (
    CountResult,
    MinimumResult,
    SearchLimits,
    SearchResult,
    SearchStatus,
)

logger = logging.getLogger(__name__)

__all__ = [
    "CoverProblem",
    "enumerate_placements",
    "solve",
    "branch_quotas",
    "find_minimum",
    "min_monominoes_search",
    "count_solutions",
    "naive_count",
]

# Branch marker for "leave the chosen column to a monomino"
MONOMINO_BRANCH = -1
_TIME_CHECK_MASK = 1023


def enumerate_placements(region: Region) -> List[TPlacement]:
    """Every T lying fully inside the region, in lexicographic order of sorted cells"""
    placements = set()
    for anchor in region.cells:
        for orientation in Orientation:
            cells = t_cells(anchor, orientation)
            if cells <= region.cells:
                placements.add(TPlacement(tuple(cells)))
    return sorted(placements)


@dataclass(frozen=True)
class CoverProblem:
    """A region, every T that fits in it, and the monomino allowance"""
    region: Region
    candidate_placements: Tuple[TPlacement, ...]
    monomino_budget: int

    @classmethod
    def build(cls, region: Region, monomino_budget: int) -> "CoverProblem":
        if monomino_budget < 0:
            raise RegionError(f"Monomino budget must be nonnegative, got {monomino_budget}")
        return cls(region, tuple(enumerate_placements(region)), monomino_budget)


class _LimitReached(Exception):
    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(reason)


class DancingLinks:
    """
    Array-backed dancing-links matrix with monomino branching.

    One instance serves a single run; an aborted run leaves the links
    partially covered.
    """

    def __init__(self, problem: CoverProblem, limits: SearchLimits, keep_solutions: bool = False):
        self.problem = problem
        self.limits = limits
        self.keep_solutions = keep_solutions
        self.cells = problem.region.sorted_cells()
        self.nodes = 0
        self.solutions: List[Tuple[Tuple[int, ...], Tuple[int, ...]]] = []
        self.count = 0
        self._stop_at_first = True
        self._rows: List[int] = []
        self._monos: List[int] = []
        self._start = time.perf_counter()
        self._build()

    def _build(self) -> None:
        n = len(self.cells)
        column_of = {cell: i + 1 for i, cell in enumerate(self.cells)}
        # node 0 is the root, nodes 1..n the column headers
        self.L = [i - 1 for i in range(n + 1)]
        self.R = [i + 1 for i in range(n + 1)]
        self.L[0], self.R[n] = n, 0
        self.U = list(range(n + 1))
        self.D = list(range(n + 1))
        self.C = list(range(n + 1))
        self.S = [0] * (n + 1)
        self.row_of = [-1] * (n + 1)

        for index, placement in enumerate(self.problem.candidate_placements):
            first = len(self.L)
            columns = sorted(column_of[cell] for cell in placement.cells)
            for k, column in enumerate(columns):
                node = first + k
                self.C.append(column)
                self.row_of.append(index)
                self.U.append(self.U[column])
                self.D.append(column)
                self.D[self.U[column]] = node
                self.U[column] = node
                self.S[column] += 1
                self.L.append(node - 1 if k else first + 3)
                self.R.append(node + 1 if k < 3 else first)

    def _cover(self, c: int) -> None:
        L, R, U, D, C, S = self.L, self.R, self.U, self.D, self.C, self.S
        R[L[c]] = R[c]
        L[R[c]] = L[c]
        i = D[c]
        while i != c:
            j = R[i]
            while j != i:
                D[U[j]] = D[j]
                U[D[j]] = U[j]
                S[C[j]] -= 1
                j = R[j]
            i = D[i]

    def _uncover(self, c: int) -> None:
        L, R, U, D, C, S = self.L, self.R, self.U, self.D, self.C, self.S
        i = U[c]
        while i != c:
            j = L[i]
            while j != i:
                S[C[j]] += 1
                D[U[j]] = j
                U[D[j]] = j
                j = L[j]
            i = U[i]
        R[L[c]] = c
        L[R[c]] = c

    def _select(self, r: int) -> None:
        j = self.R[r]
        while j != r:
            self._cover(self.C[j])
            j = self.R[j]

    def _deselect(self, r: int) -> None:
        j = self.L[r]
        while j != r:
            self._uncover(self.C[j])
            j = self.L[j]

    def _tick(self) -> None:
        if self.nodes >= self.limits.max_nodes:
            raise _LimitReached("nodes")
        self.nodes += 1
        if self.nodes == 1 or not self.nodes & _TIME_CHECK_MASK:
            if time.perf_counter() - self._start > self.limits.max_seconds:
                raise _LimitReached("time")

    def _choose(self, budget: int) -> Optional[int]:
        """Column with fewest candidates, or None when the node is dead"""
        R, S = self.R, self.S
        best, best_size, empty = 0, None, 0
        c = R[0]
        while c:
            size = S[c]
            if size == 0:
                empty += 1
            if best_size is None or size < best_size:
                best, best_size = c, size
            c = R[c]
        # every column without candidates needs its own monomino
        if empty > budget:
            return None
        return best

    def _accept(self) -> bool:
        self.count += 1
        if self.keep_solutions or self._stop_at_first:
            self.solutions.append((tuple(self._rows), tuple(self._monos)))
        return self._stop_at_first

    def _search(self, budget: int, remaining: int) -> bool:
        self._tick()
        if self.R[0] == 0:
            return self._accept()
        # the leftover area must be coverable by the monominoes still allowed
        if remaining % 4 > budget:
            return False
        c = self._choose(budget)
        if c is None:
            return False

        self._cover(c)
        stop = self._try_rows(c, budget, remaining)
        if not stop and budget > 0:
            stop = self._try_monomino(c, budget, remaining)
        self._uncover(c)
        return stop

    def _try_rows(self, c: int, budget: int, remaining: int) -> bool:
        r = self.D[c]
        while r != c:
            if self._try_row(r, budget, remaining):
                return True
            r = self.D[r]
        return False

    def _try_row(self, r: int, budget: int, remaining: int) -> bool:
        self._rows.append(self.row_of[r])
        self._select(r)
        stop = self._search(budget, remaining - 4)
        self._deselect(r)
        self._rows.pop()
        return stop

    def _try_monomino(self, c: int, budget: int, remaining: int) -> bool:
        self._monos.append(c)
        stop = self._search(budget - 1, remaining - 1)
        self._monos.pop()
        return stop

    def root_branches(self) -> Optional[List[int]]:
        """
        Options at the root column in search order: row nodes, then
        MONOMINO_BRANCH. None when the root decides the search by itself.
        """
        budget = self.problem.monomino_budget
        if self.R[0] == 0 or len(self.cells) % 4 > budget:
            return None
        c = self._choose(budget)
        if c is None:
            return None
        branches = []
        r = self.D[c]
        while r != c:
            branches.append(r)
            r = self.D[r]
        if budget > 0:
            branches.append(MONOMINO_BRANCH)
        return branches

    def run(self, stop_at_first: bool = True) -> SearchResult:
        self._stop_at_first = stop_at_first
        budget = self.problem.monomino_budget
        return self._finish(lambda: self._search(budget, len(self.cells)))

    def run_branch(self, branch: int) -> SearchResult:
        """Search below one root option only, counting the root as a node"""
        budget = self.problem.monomino_budget
        remaining = len(self.cells)

        def search() -> bool:
            self._tick()
            c = self._choose(budget)
            self._cover(c)
            if branch == MONOMINO_BRANCH:
                return self._try_monomino(c, budget, remaining)
            return self._try_row(branch, budget, remaining)

        return self._finish(search)

    def _finish(self, search) -> SearchResult:
        try:
            found = search()
        except _LimitReached as exc:
            return SearchResult(
                SearchStatus.ABORTED, self.nodes, self._elapsed(), abort_reason=exc.reason
            )
        if found:
            return SearchResult(SearchStatus.FOUND, self.nodes, self._elapsed(), tiling=self.tiling(0))
        return SearchResult(SearchStatus.INFEASIBLE, self.nodes, self._elapsed())

    def _elapsed(self) -> float:
        return time.perf_counter() - self._start

    def tiling(self, index: int) -> Tiling:
        rows, monos = self.solutions[index]
        placements = self.problem.candidate_placements
        return Tiling(
            self.problem.region,
            tuple(placements[row] for row in rows),
            tuple(self.cells[column - 1] for column in monos),
        )

    def solution_pieces(self, index: int) -> List[Tuple[Cell, ...]]:
        rows, monos = self.solutions[index]
        placements = self.problem.candidate_placements
        pieces = [placements[row].cells for row in rows]
        pieces.extend((self.cells[column - 1],) for column in monos)
        return pieces


def _resolve_limits(limits: Optional[SearchLimits]) -> SearchLimits:
    return limits if limits is not None else SearchLimits()


def branch_quotas(max_nodes: int, branch_count: int) -> List[int]:
    """Split a node budget over root branches, earlier branches taking the remainder"""
    share, extra = divmod(max_nodes, branch_count)
    return [share + (1 if i < extra else 0) for i in range(branch_count)]


def _run_branch(problem: CoverProblem, max_nodes: int, deadline: float, branch: int) -> SearchResult:
    # deadline is wall-clock so it means the same in every worker process
    remaining = deadline - time.time()
    if max_nodes < 1:
        return SearchResult(SearchStatus.ABORTED, 0, 0.0, abort_reason="nodes")
    if remaining <= 0:
        return SearchResult(SearchStatus.ABORTED, 0, 0.0, abort_reason="time")
    limits = SearchLimits(max_nodes=max_nodes, max_seconds=remaining)
    return DancingLinks(problem, limits).run_branch(branch)


def _solve_parallel(problem: CoverProblem, limits: SearchLimits, workers: Optional[int]) -> SearchResult:
    """
    Search the root branches in worker processes.

    The node limit is split over the branches and every branch stops at the
    same deadline, so the whole call stays within its limits. A tiling found
    in any branch decides the search; results are read in branch order.
    """
    start = time.perf_counter()
    deadline = time.time() + limits.max_seconds
    branches = DancingLinks(problem, limits).root_branches()
    if branches is None:
        return DancingLinks(problem, limits).run()

    quotas = branch_quotas(limits.max_nodes, len(branches))
    logger.info("Searching %d root branches in parallel", len(branches))
    nodes = 0
    abort_reason = None
    pool = ProcessPoolExecutor(max_workers=workers or settings.parallel_workers)
    try:
        futures = [
            pool.submit(_run_branch, problem, quota, deadline, branch)
            for quota, branch in zip(quotas, branches)
        ]
        for future in futures:
            result = future.result()
            nodes += result.nodes_expanded
            if result.found:
                return SearchResult(
                    SearchStatus.FOUND, nodes, time.perf_counter() - start, tiling=result.tiling
                )
            if result.status is SearchStatus.ABORTED and abort_reason is None:
                abort_reason = result.abort_reason
    finally:
        pool.shutdown(wait=False, cancel_futures=True)

    elapsed = time.perf_counter() - start
    if abort_reason is not None:
        return SearchResult(SearchStatus.ABORTED, nodes, elapsed, abort_reason=abort_reason)
    return SearchResult(SearchStatus.INFEASIBLE, nodes, elapsed)


def solve(
    problem: CoverProblem,
    limits: Optional[SearchLimits] = None,
    parallel: bool = False,
    workers: Optional[int] = None,
) -> SearchResult:
    """
    Find a tiling of the problem region with at most monomino_budget monominoes.

    Args:
        problem: Region, candidate T's and monomino budget
        limits: Node and time budget; defaults come from settings
        parallel: Split the root branches over worker processes, sharing the
            node limit and deadline. When neither mode aborts, the status
            matches single-process mode; nodes_expanded may differ
        workers: Process count for parallel mode

    Returns:
        SearchResult; FOUND carries the first tiling in search order
    """
    limits = _resolve_limits(limits)
    logger.info(
        "Solving %r with %d candidate T's and budget %d",
        problem.region, len(problem.candidate_placements), problem.monomino_budget,
    )
    if parallel:
        result = _solve_parallel(problem, limits, workers)
    else:
        result = DancingLinks(problem, limits).run()

    if result.status is SearchStatus.ABORTED:
        logger.warning("Search of %r aborted after %d nodes (%s limit)",
                       problem.region, result.nodes_expanded, result.abort_reason)
    else:
        logger.info("Search of %r: %s after %d nodes",
                    problem.region, result.status.value, result.nodes_expanded)
    return result


def find_minimum(
    n: int,
    limits: Optional[SearchLimits] = None,
    parallel: bool = False,
    workers: Optional[int] = None,
) -> MinimumResult:
    """
    Smallest monomino budget k for which the n x n square has a tiling,
    found by trying k = 0, 1, 2, ... in turn.

    Raises:
        RegionError: If n < 1
        SearchAborted: If any attempt hits its limits
    """
    region = Region.square(n)
    attempts = []
    for budget in range(n * n + 1):
        result = solve(CoverProblem.build(region, budget), limits, parallel, workers)
        attempts.append(result)
        if result.status is SearchStatus.ABORTED:
            raise SearchAborted(result)
        if result.found:
            return MinimumResult(n, budget, tuple(attempts))
    # n*n monominoes always tile the square
    raise AssertionError("unreachable")


def min_monominoes_search(n: int, limits: Optional[SearchLimits] = None, parallel: bool = False) -> int:
    """Smallest number of monominoes in any tiling of the n x n square"""
    return find_minimum(n, limits, parallel).min_monominoes


def _region_symmetries(region: Region) -> List[Tuple[Axis, ...]]:
    """Dihedral maps of the bounding box that send the region onto itself"""
    bounds = region.bounds
    symmetries = []
    for axes, image in dihedral_images(region.sorted_cells(), bounds):
        if {Cell(r, c) for r, c in image.tolist()} == region.cells:
            symmetries.append(axes)
    return symmetries


def _canonical_form(pieces: Sequence[Tuple[Cell, ...]], axes: Tuple[Axis, ...], bounds: Bounds) -> tuple:
    mapped = []
    for piece in pieces:
        image = np.array(piece, dtype=np.int64).reshape(-1, 2)
        for axis in axes:
            image = transform_array(image, axis, bounds)
        mapped.append(tuple(sorted(map(tuple, image.tolist()))))
    return tuple(sorted(mapped))


def count_solutions(
    problem: CoverProblem,
    limits: Optional[SearchLimits] = None,
    symmetry: bool = False,
) -> CountResult:
    """
    Count the tilings of the problem region with at most monomino_budget monominoes.

    Args:
        problem: Region, candidate T's and monomino budget
        limits: Node and time budget; defaults come from settings
        symmetry: Also count orbits under the symmetries of the region

    Returns:
        CountResult with raw count and, when requested, the orbit count

    Raises:
        SearchAborted: If the search hits its limits
    """
    limits = _resolve_limits(limits)
    links = DancingLinks(problem, limits, keep_solutions=symmetry)
    result = links.run(stop_at_first=False)
    if result.status is SearchStatus.ABORTED:
        logger.warning("Count of %r aborted after %d nodes", problem.region, result.nodes_expanded)
        raise SearchAborted(result)

    orbits = None
    if symmetry:
        bounds = problem.region.bounds
        symmetries = _region_symmetries(problem.region)
        orbits = len({
            min(_canonical_form(links.solution_pieces(i), axes, bounds) for axes in symmetries)
            for i in range(len(links.solutions))
        })
    logger.info("Counted %d tilings of %r", links.count, problem.region)
    return CountResult(raw=links.count, orbits=orbits, nodes_expanded=result.nodes_expanded)


def naive_count(region: Region, monomino_budget: int) -> int:
    """
    Count tilings by plain backtracking: fill the first uncovered cell in
    row-major order with a monomino or with each T containing it.
    """
    order = region.sorted_cells()
    containing: Dict[Cell, List[frozenset]] = {cell: [] for cell in order}
    for placement in enumerate_placements(region):
        for cell in placement.cells:
            containing[cell].append(placement.cell_set)

    covered = set()

    def backtrack(start: int, budget: int) -> int:
        while start < len(order) and order[start] in covered:
            start += 1
        if start == len(order):
            return 1
        cell = order[start]
        total = 0
        if budget > 0:
            covered.add(cell)
            total += backtrack(start + 1, budget - 1)
            covered.discard(cell)
        for piece in containing[cell]:
            if covered.isdisjoint(piece):
                covered.update(piece)
                total += backtrack(start + 1, budget)
                covered.difference_update(piece)
        return total

    return backtrack(0, monomino_budget)
