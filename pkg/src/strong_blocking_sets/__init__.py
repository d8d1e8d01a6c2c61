"""Strong Blocking Sets.

This package verifies, classifies and searches strong blocking sets in small
projective spaces over prime fields, together with the equivalent minimal
linear codes.
"""

from .blocking import (
    BlockingReport,
    LineCountReport,
    PlaneSectionReport,
    check_contained_lines,
    check_plane_sections,
    corollary_bound,
    is_minimal_strong_blocking_set,
    is_strong_blocking_set,
    lower_bound,
)
from .budgets import Budgets
from .classify import (
    GL42_ORDER,
    GOLDEN_ORBITS,
    PGO_PLUS_ORDER,
    Configuration,
    Group,
    GroupElement,
    OrbitReport,
    apply,
    build_group,
    canonical_form,
    check_main_theorem,
    classify_subsets,
    group_elements,
    intersection_signature,
    line_pair_census,
    orbit,
    punctured_plane_census,
    remark_witnesses,
    stabilizer_order,
)
from .codes import (
    Codeword,
    LinearCode,
    MinimalityReport,
    code_from_pointset,
    enumerate_codewords,
    is_minimal_code,
    is_minimal_codeword,
    minimum_distance,
    pointset_from_code,
    repetition_code,
    simplex_code,
    weight_distribution,
)
from .field import FieldElement, rank_gf
from .formats import read_code, read_pointsets, write_code, write_pointsets
from .geometry import (
    Geometry,
    PointSet,
    ProjPoint,
    Subspace,
    build_geometry,
    hyperbolic_quadric,
    lines_through,
    parabolic_quadric,
    pencil_through,
    quadric_rulings,
    span,
)
from .search import (
    SearchConfig,
    SearchMode,
    SearchResult,
    find_all_sbs,
    prove_nonexistence,
    search_line_union,
)

__all__: list[str] = [
    "GL42_ORDER",
    "GOLDEN_ORBITS",
    "PGO_PLUS_ORDER",
    "BlockingReport",
    "Budgets",
    "Codeword",
    "Configuration",
    "FieldElement",
    "Geometry",
    "Group",
    "GroupElement",
    "LineCountReport",
    "LinearCode",
    "MinimalityReport",
    "OrbitReport",
    "PlaneSectionReport",
    "PointSet",
    "ProjPoint",
    "SearchConfig",
    "SearchMode",
    "SearchResult",
    "Subspace",
    "apply",
    "build_geometry",
    "build_group",
    "canonical_form",
    "check_contained_lines",
    "check_main_theorem",
    "check_plane_sections",
    "classify_subsets",
    "code_from_pointset",
    "corollary_bound",
    "enumerate_codewords",
    "find_all_sbs",
    "group_elements",
    "hyperbolic_quadric",
    "intersection_signature",
    "is_minimal_code",
    "is_minimal_codeword",
    "is_minimal_strong_blocking_set",
    "is_strong_blocking_set",
    "line_pair_census",
    "lines_through",
    "lower_bound",
    "minimum_distance",
    "orbit",
    "parabolic_quadric",
    "pencil_through",
    "pointset_from_code",
    "prove_nonexistence",
    "punctured_plane_census",
    "quadric_rulings",
    "rank_gf",
    "read_code",
    "read_pointsets",
    "remark_witnesses",
    "repetition_code",
    "search_line_union",
    "simplex_code",
    "span",
    "stabilizer_order",
    "weight_distribution",
    "write_code",
    "write_pointsets",
]
