"""Exact interpolation node-set computations on rational points."""

from .constructions import (
    ChungYaoLattice,
    ExtremalConfig,
    GcCorollaryConfig,
    GenerationError,
    LineArrangement,
    OnCurveConfig,
    PairDivisionInstance,
    chung_yao_lattice,
    extend_to_maximal_on_curve,
    extend_to_poised,
    extremal_config,
    extremal_seven_config,
    gc_corollary_config,
    independent_set_on_curve,
    pair_division,
    points_on_line,
    principal_lattice,
    random_independent_set,
    random_line_arrangement,
)
from .curves import (
    Curve,
    curve_from_json,
    curve_to_json,
    d,
    find_maximal_curve,
    is_maximal_curve,
    line_product,
    maximal_curve_factorization_check,
    nodes_on_curve,
    uses_line,
)
from .exactnum import (
    Matrix,
    Rational,
    format_rational,
    nullspace,
    parse_rational,
    rank,
    solve,
)
from .nodesets import (
    Node,
    NodeSet,
    VanishingSpace,
    are_collinear,
    collocation_matrix,
    fundamental_polynomial,
    is_independent,
    is_poised,
    maximal_independent_indices,
    maximal_independent_subset,
    monomial_row,
    node,
    nodeset_from_json,
    nodeset_to_json,
    replace_node,
    vanishing_space,
)
from .poly2 import (
    Line,
    Poly2,
    X,
    Y,
    distinct_line_intersections,
    divides,
    is_square_free,
    line_from_json,
    line_intersection,
    line_to_json,
    monomials,
    poly_from_json,
    poly_to_json,
    restrict_to_line,
    space_dimension,
)
from .verify import (
    ConfigReport,
    all_pass,
    check_gc,
    check_hk,
    check_ht,
    check_ht2,
    check_hkv,
    check_main,
    run_trial,
    run_trials,
)

__version__ = "0.1.0"
