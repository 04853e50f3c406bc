"""Colored polyomino toolkit: build, solve, and check smallest-superpolyomino instances."""

from ._core import (  # noqa: F401
    ColoringInstance,
    Graph,
    Instance,
    Polyomino,
    SetCoverInstance,
    SuperpolyError,
    aligned_layout,
    aligned_solve,
    build_coloring_instance,
    build_element_polyomino,
    build_set_polyomino,
    build_setcover_instance,
    build_vertex_polyomino,
    chromatic_number,
    compatible,
    deck_layout,
    deck_solve,
    element_poly_size,
    emit_graph,
    emit_instance,
    emit_layout,
    emit_polyomino,
    emit_setcover,
    evaluate_layout,
    extract_coloring,
    extract_cover,
    from_two_color,
    is_superpolyomino,
    make_polyomino,
    max_overlap,
    min_set_cover,
    misalignment_size,
    parse_graph,
    parse_instance,
    parse_layout,
    parse_polyomino,
    parse_setcover,
    render_svg,
    render_svg_instance,
    set_poly_size,
    solve_brute,
    solve_exact,
    solve_greedy,
    subshape_filter,
    superimpose,
    threshold_k,
    to_two_color,
    translate,
    vertex_poly_size,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
