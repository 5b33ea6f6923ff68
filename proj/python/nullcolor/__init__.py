"""Rainbow-free colorings of sphere and projective-plane triangulations."""

from ._core import (
    BoundReport,
    BudgetExhausted,
    Coloring,
    ExtremalWitness,
    MultiGraph,
    ParseError,
    Triangulation,
    ValidationError,
    bichromatic_face_count,
    bipyramid,
    bound,
    build_graph,
    chi_f,
    classify_surface,
    coloring_induced_matrix,
    cycle_rank,
    distance,
    exists_non_rainbow_k,
    extremal,
    face_count_expected,
    icosahedron,
    identify_vertices,
    is_bipartite,
    is_epimorphism,
    is_forest,
    is_maximal_null,
    is_non_rainbow,
    is_null_coloring,
    make_coloring,
    make_graph_coloring,
    max_null,
    octahedron,
    projective_base,
    projective_family,
    quotient_graph,
    rainbow_faces,
    simplify,
    smith_normal_form,
    stacked,
    subdivide_face,
    tetrahedron,
    validate_triangulation,
    verify_bound,
)

__all__ = [name for name in dir() if not name.startswith("_")]
