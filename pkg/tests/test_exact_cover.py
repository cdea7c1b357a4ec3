import pytest

from tetrotile.core.exceptions import RegionError, SearchAborted
from tetrotile.models import Cell, Region, SearchLimits, SearchStatus
from tetrotile.services.exact_cover import (
    CoverProblem,
    branch_quotas,
    count_solutions,
    enumerate_placements,
    find_minimum,
    min_monominoes_search,
    naive_count,
    solve,
)
from tetrotile.services.formulas import min_monomino_count
from tetrotile.services.verifier import verify

# The four T shapes as offsets from the lower-left corner of their 2x3 or 3x2 box
T_SHAPES = (
    ((0, 0), (0, 1), (0, 2), (1, 1)),
    ((1, 0), (1, 1), (1, 2), (0, 1)),
    ((0, 0), (1, 0), (2, 0), (1, 1)),
    ((0, 1), (1, 1), (2, 1), (1, 0)),
)


def brute_force_placement_count(n: int) -> int:
    count = 0
    for shape in T_SHAPES:
        for row in range(n):
            for col in range(n):
                if all(row + dr < n and col + dc < n for dr, dc in shape):
                    count += 1
    return count


@pytest.mark.solver
class TestEnumeratePlacements:
    """Test candidate placement enumeration"""

    def test_two_by_two_is_empty(self):
        """Test that no T fits in the 2x2 square"""
        assert enumerate_placements(Region.square(2)) == []

    @pytest.mark.parametrize("n", [3, 4, 5, 7])
    def test_matches_brute_force(self, n):
        """Test the count against a double loop over anchors and shapes"""
        assert len(enumerate_placements(Region.square(n))) == brute_force_placement_count(n)

    def test_square_three(self):
        """Test the 8 placements of the 3x3 square"""
        assert len(enumerate_placements(Region.square(3))) == 8

    def test_sorted_and_unique(self):
        """Test lexicographic order without duplicates"""
        placements = enumerate_placements(Region.a_n(5))
        assert placements == sorted(set(placements))

    def test_placements_stay_inside(self):
        """Test that every placement lies in the region"""
        region = Region.a_n(5)
        for placement in enumerate_placements(region):
            assert placement.cell_set <= region.cells


@pytest.mark.solver
class TestSolve:
    """Test the feasibility search"""

    def test_square_four_no_monominoes(self, test_limits):
        """Test that the 4x4 square is found with 4 T's"""
        result = solve(CoverProblem.build(Region.square(4), 0), test_limits)
        assert result.status is SearchStatus.FOUND
        assert result.tiling.t_count == 4
        assert verify(result.tiling).valid

    def test_square_six_needs_four(self, test_limits):
        """Test that 3 monominoes do not suffice for the 6x6 square"""
        result = solve(CoverProblem.build(Region.square(6), 3), test_limits)
        assert result.status is SearchStatus.INFEASIBLE

    def test_square_five_one_monomino(self, test_limits):
        """Test that T's plus a single monomino never tile the 5x5 square"""
        result = solve(CoverProblem.build(Region.square(5), 1), test_limits)
        assert result.status is SearchStatus.INFEASIBLE

    def test_a5_one_monomino(self, test_limits):
        """Test that A_5 has a tiling with one monomino"""
        result = solve(CoverProblem.build(Region.a_n(5), 1), test_limits)
        assert result.found
        assert (result.tiling.t_count, result.tiling.mono_count) == (5, 1)
        assert verify(result.tiling).valid

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_minimality(self, n, test_limits):
        """Test that the closed-form minimum is found and one fewer is infeasible"""
        best = min_monomino_count(n)
        found = solve(CoverProblem.build(Region.square(n), best), test_limits)
        assert found.found
        assert found.tiling.mono_count <= best
        assert verify(found.tiling).valid
        if best > 0:
            below = solve(CoverProblem.build(Region.square(n), best - 1), test_limits)
            assert below.status is SearchStatus.INFEASIBLE

    @pytest.mark.parametrize("n, budgets", [(2, range(4)), (3, range(5)), (5, range(1, 5)), (6, range(4))])
    def test_all_smaller_budgets_infeasible(self, n, budgets, test_limits):
        """Test every budget below the minimum"""
        for budget in budgets:
            result = solve(CoverProblem.build(Region.square(n), budget), test_limits)
            assert result.status is SearchStatus.INFEASIBLE, budget

    @pytest.mark.slow
    def test_minimality_seven(self):
        """Test the 7x7 square under generous limits"""
        limits = SearchLimits(max_nodes=10**9, max_seconds=3000.0)
        for budget in range(5):
            result = solve(CoverProblem.build(Region.square(7), budget), limits)
            assert result.status is SearchStatus.INFEASIBLE, budget
        assert solve(CoverProblem.build(Region.square(7), 5), limits).found

    def test_deterministic(self, test_limits):
        """Test that repeated runs agree on status, node count and tiling"""
        problem = CoverProblem.build(Region.square(6), 4)
        first = solve(problem, test_limits)
        second = solve(problem, test_limits)
        assert first.to_dict() == second.to_dict()
        assert first.tiling == second.tiling

    def test_node_limit(self, tiny_limits):
        """Test that hitting the node cap aborts rather than reporting infeasible"""
        result = solve(CoverProblem.build(Region.square(6), 3), tiny_limits)
        assert result.status is SearchStatus.ABORTED
        assert result.abort_reason == "nodes"
        assert result.nodes_expanded <= tiny_limits.max_nodes
        assert result.tiling is None

    def test_time_limit(self):
        """Test that the wall-clock cap is reported separately"""
        limits = SearchLimits(max_nodes=10**9, max_seconds=1e-9)
        result = solve(CoverProblem.build(Region.square(7), 4), limits)
        assert result.status is SearchStatus.ABORTED
        assert result.abort_reason == "time"
        assert result.nodes_expanded == 1

    def test_time_limit_while_counting(self):
        """Test that counting honors the wall-clock cap"""
        limits = SearchLimits(max_nodes=10**9, max_seconds=1e-9)
        with pytest.raises(SearchAborted) as excinfo:
            count_solutions(CoverProblem.build(Region.square(6), 4), limits)
        assert excinfo.value.result.abort_reason == "time"

    def test_negative_budget(self):
        """Test that budgets must be nonnegative"""
        with pytest.raises(RegionError):
            CoverProblem.build(Region.square(3), -1)

    def test_single_cell(self, test_limits):
        """Test the 1x1 square with and without a monomino"""
        assert solve(CoverProblem.build(Region.square(1), 1), test_limits).found
        assert not solve(CoverProblem.build(Region.square(1), 0), test_limits).found


@pytest.mark.solver
class TestParallelSolve:
    """Test the process-pool search"""

    @pytest.mark.parametrize("region, budget", [
        (Region.square(4), 0),
        (Region.square(5), 1),
        (Region.a_n(5), 1),
        (Region.square(6), 4),
    ])
    def test_status_matches_serial(self, region, budget, test_limits):
        """Test that parallel and serial searches agree on status"""
        problem = CoverProblem.build(region, budget)
        serial = solve(problem, test_limits)
        parallel = solve(problem, test_limits, parallel=True, workers=2)
        assert parallel.status is serial.status
        if parallel.found:
            assert verify(parallel.tiling).valid

    def test_trivial_root(self, test_limits):
        """Test a problem decided at the root"""
        result = solve(CoverProblem.build(Region.square(3), 0), test_limits, parallel=True, workers=2)
        assert result.status is SearchStatus.INFEASIBLE

    def test_node_limit_shared(self):
        """Test that all branches together stay within the node cap"""
        limits = SearchLimits(max_nodes=200, max_seconds=300.0)
        problem = CoverProblem.build(Region.square(7), 4)
        serial = solve(problem, limits)
        parallel = solve(problem, limits, parallel=True, workers=2)
        assert serial.status is SearchStatus.ABORTED
        assert parallel.status is SearchStatus.ABORTED
        assert parallel.abort_reason == "nodes"
        assert parallel.nodes_expanded <= limits.max_nodes

    def test_deadline_shared(self):
        """Test that branches stop at the deadline of the whole call"""
        limits = SearchLimits(max_nodes=10**9, max_seconds=1e-9)
        result = solve(CoverProblem.build(Region.square(7), 4), limits, parallel=True, workers=2)
        assert result.status is SearchStatus.ABORTED
        assert result.abort_reason == "time"

    @pytest.mark.parametrize("max_nodes, branch_count, expected", [
        (10, 3, [4, 3, 3]),
        (9, 3, [3, 3, 3]),
        (2, 4, [1, 1, 0, 0]),
    ])
    def test_branch_quotas(self, max_nodes, branch_count, expected):
        """Test the split of the node cap over root branches"""
        assert branch_quotas(max_nodes, branch_count) == expected


@pytest.mark.solver
class TestMinMonominoes:
    """Test the increasing-budget minimum search"""

    @pytest.mark.parametrize("n, expected", [(1, 1), (2, 4), (3, 5), (4, 0), (5, 5), (6, 4)])
    def test_values(self, n, expected, test_limits):
        """Test against the closed form"""
        assert min_monominoes_search(n, test_limits) == expected

    def test_result_dict(self, test_limits):
        """Test the structured result"""
        minimum = find_minimum(6, test_limits)
        data = minimum.to_dict()
        assert data["n"] == 6
        assert data["min_monominoes"] == 4
        assert data["max_tetrominoes"] == 8
        assert data["nodes_expanded"] == sum(a.nodes_expanded for a in minimum.attempts)
        assert len(minimum.attempts) == 5
        assert verify(minimum.tiling).valid

    def test_aborted(self, tiny_limits):
        """Test that an aborted attempt propagates"""
        with pytest.raises(SearchAborted) as excinfo:
            min_monominoes_search(6, tiny_limits)
        assert excinfo.value.result.abort_reason == "nodes"


@pytest.mark.solver
class TestCountSolutions:
    """Test exhaustive counting"""

    def test_two_by_two(self, test_limits):
        """Test that the all-monomino tiling is the only one"""
        assert count_solutions(CoverProblem.build(Region.square(2), 4), test_limits).raw == 1

    def test_square_three_one_monomino(self, test_limits):
        """Test that 9 cells cannot take two T's and one monomino"""
        assert count_solutions(CoverProblem.build(Region.square(3), 1), test_limits).raw == 0

    def test_pinwheel_orbits(self, test_limits):
        """Test the two 4x4 T-tilings forming one orbit"""
        counted = count_solutions(CoverProblem.build(Region.square(4), 0), test_limits, symmetry=True)
        assert counted.raw == 2
        assert counted.orbits == 1

    def test_orbits_not_requested(self, test_limits):
        """Test that orbits are only computed on request"""
        assert count_solutions(CoverProblem.build(Region.square(4), 0), test_limits).orbits is None

    @pytest.mark.parametrize("region, budget", [
        (Region.square(2), 4),
        (Region.square(3), 5),
        (Region.square(4), 0),
        (Region.square(4), 4),
        (Region.square(5), 1),
        (Region.square(5), 5),
        (Region.a_n(5), 1),
        (Region.a_n(5), 5),
        (Region.l_strip(6, 4), 4),
        (Region.square(6), 0),
        (Region.explicit([Cell(0, c) for c in range(3)] + [Cell(1, 1), Cell(1, 2)]), 1),
    ])
    def test_matches_naive_count(self, region, budget, test_limits):
        """Test dancing links against plain backtracking"""
        assert count_solutions(CoverProblem.build(region, budget), test_limits).raw == naive_count(region, budget)

    def test_symmetric_orbits_bounded(self, test_limits):
        """Test that orbit counts lie between raw / 8 and raw"""
        counted = count_solutions(CoverProblem.build(Region.square(4), 4), test_limits, symmetry=True)
        assert counted.raw / 8 <= counted.orbits <= counted.raw

    def test_aborted(self, tiny_limits):
        """Test that counting raises when limits are hit"""
        with pytest.raises(SearchAborted):
            count_solutions(CoverProblem.build(Region.square(5), 5), tiny_limits)


class TestNaiveCount:
    """Test the backtracking oracle on its own"""

    def test_small_values(self):
        """Test hand-checked counts"""
        assert naive_count(Region.square(2), 4) == 1
        assert naive_count(Region.square(2), 3) == 0
        assert naive_count(Region.square(4), 0) == 2
        assert naive_count(Region.square(1), 1) == 1
