"""
Closed-form optimum counts for tiling the n x n square with T-tetrominoes
and monominoes.

For n > 1 the maximal tetromino count by n mod 4 is n^2/4, (n^2-1)/4 - 1,
n^2/4 - 1 and (n^2-1)/4 - 1. The 1x1 square is the one exception: it holds
no tetromino and exactly one monomino.
"""

from typing import List

from tetrotile.core.exceptions import ConstructionError
from tetrotile.models.results import SquareSummary

__all__ = [
    "max_t_count",
    "min_monomino_count",
    "a_n_area",
    "lemma_t_count",
    "extension_t_count",
    "square_summary",
    "sequence",
]


def _require_positive(value: int, name: str) -> None:
    if value < 1:
        raise ConstructionError(f"{name} must be a positive integer, got {value}")


def max_t_count(n: int) -> int:
    """Maximal number of T-tetrominoes in a tiling of the n x n square"""
    _require_positive(n, "n")
    if n == 1:
        return 0
    residue = n % 4
    if residue == 0:
        return n * n // 4
    if residue == 2:
        return n * n // 4 - 1
    return (n * n - 1) // 4 - 1


def min_monomino_count(n: int) -> int:
    """Minimal number of monominoes: 1, 0, 4 or 5"""
    _require_positive(n, "n")
    if n == 1:
        return 1
    residue = n % 4
    if residue == 0:
        return 0
    if residue == 2:
        return 4
    return 5


def a_n_area(m: int) -> int:
    """Area of A_{2m+1}, the odd square with four cells removed"""
    _require_positive(m, "m")
    n = 2 * m + 1
    area = n * n - 4
    assert area == 4 * lemma_t_count(m) + 1
    return area


def lemma_t_count(m: int) -> int:
    """Tetrominoes in the one-monomino tiling of A_{2m+1}"""
    _require_positive(m, "m")
    return m * m + m - 1


def extension_t_count(n: int) -> int:
    """Tetrominoes added when an odd-sided A_n grows to A_{n+2}"""
    if n < 3 or n % 2 == 0:
        raise ConstructionError(f"n must be odd and at least 3, got {n}")
    return ((n + 2) ** 2 - n ** 2) // 4


def square_summary(n: int) -> SquareSummary:
    return SquareSummary(
        n=n,
        max_t=max_t_count(n),
        min_mono=min_monomino_count(n),
        residue=n % 4,
    )


def sequence(bound: int) -> List[SquareSummary]:
    """Summaries for every side length 1..bound"""
    _require_positive(bound, "bound")
    return [square_summary(n) for n in range(1, bound + 1)]
