import pytest
from pathlib import Path
from typing import Dict

from tetrotile.constructions import gadget_tilings, tile_any
from tetrotile.models import Cell, Orientation, Region, SearchLimits, Tiling, TPlacement
from tetrotile.services.render import emit_json


@pytest.fixture
def pinwheel_tiling() -> Tiling:
    """The 4x4 square tiled by four T's"""
    return tile_any(4)


@pytest.fixture
def gadgets() -> Dict[str, Tiling]:
    """Every construction gadget keyed by name"""
    return gadget_tilings()


@pytest.fixture
def a5_tiling(gadgets) -> Tiling:
    """A_5 with five T's and one monomino"""
    return gadgets["a5"]


@pytest.fixture
def overlapping_tiling() -> Tiling:
    """Two T's in the 3x3 square sharing the cell (1, 1)"""
    return Tiling(
        Region.square(3),
        (
            TPlacement.from_bar(Cell(0, 0), Orientation.STEM_UP),
            TPlacement.from_bar(Cell(2, 0), Orientation.STEM_DOWN),
        ),
        (Cell(0, 0),),
    )


@pytest.fixture
def test_limits() -> SearchLimits:
    """Limits generous enough for every desk-scale search in the suite"""
    return SearchLimits(max_nodes=10**8, max_seconds=300.0)


@pytest.fixture
def tiny_limits() -> SearchLimits:
    """Limits that abort any nontrivial search"""
    return SearchLimits(max_nodes=5, max_seconds=300.0)


@pytest.fixture
def valid_document(tmp_path: Path) -> Path:
    """JSON document of the 5x5 construction on disk"""
    path = tmp_path / "tiling5.json"
    path.write_text(emit_json(tile_any(5)), encoding="utf-8")
    return path


@pytest.fixture
def overlapping_document(tmp_path: Path, overlapping_tiling) -> Path:
    """JSON document whose pieces overlap"""
    path = tmp_path / "bad.json"
    path.write_text(emit_json(overlapping_tiling), encoding="utf-8")
    return path
