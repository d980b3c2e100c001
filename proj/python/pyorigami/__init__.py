"""Square-tiled surfaces, tricolored dessins and Schwarz-Christoffel maps."""

from ._core import (  # noqa: F401
    CsMapSpec,
    Dessin,
    OrigamiError,
    Passport,
    TricoloredDessin,
    barycentric_rational,
    barycentric_rational_exact,
    barycentric_subdivide,
    canonical_code,
    cell_counts,
    cells,
    complete_beta,
    corner_bipartition,
    cs_map,
    cs_map_derivative,
    dart_cell,
    diagonal_subdivision,
    euler_genus,
    image_triangle,
    incomplete_cs_integral,
    invert_cs_map,
    is_isomorphic,
    is_square_tiling,
    origami,
    parse_document,
    passport,
    refine_2x2,
    riemann_hurwitz_genus,
    serialize_document,
    triangle_to_square,
    validate,
    validate_tricoloring,
)

__all__ = [name for name in dir() if not name.startswith("_")]
