from .verifier import verify, verify_many, is_t_shape
from .formulas import (
    max_t_count,
    min_monomino_count,
    a_n_area,
    lemma_t_count,
    extension_t_count,
    square_summary,
    sequence,
)
from .exact_cover import (
    CoverProblem,
    enumerate_placements,
    solve,
    find_minimum,
    min_monominoes_search,
    count_solutions,
    naive_count,
)
from .render import (
    TilingDocument,
    emit_json,
    parse_json,
    render_ascii,
    render_svg,
    piece_outline,
    emit_csv_sequence,
    emit_json_sequence,
)

__all__ = [
    "verify",
    "verify_many",
    "is_t_shape",
    "max_t_count",
    "min_monomino_count",
    "a_n_area",
    "lemma_t_count",
    "extension_t_count",
    "square_summary",
    "sequence",
    "CoverProblem",
    "enumerate_placements",
    "solve",
    "find_minimum",
    "min_monominoes_search",
    "count_solutions",
    "naive_count",
    "TilingDocument",
    "emit_json",
    "parse_json",
    "render_ascii",
    "render_svg",
    "piece_outline",
    "emit_csv_sequence",
    "emit_json_sequence",
]
