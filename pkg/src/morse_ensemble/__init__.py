"""Exact toolkit for ensemble polynomials of acyclic matchings.

Every acyclic matching on the face poset of a finite simplicial complex
leaves a vector of critical-cell counts; the generating polynomial of those
vectors over all acyclic matchings is the central object here.  The package
computes it exactly (integer arithmetic throughout) by direct enumeration,
by Laplacian and spanning-forest formulas for graphs, and by a top-face
attachment recursion with an explicit non-liftable correction term, then
derives comparisons against classical invariants.
"""

from .errors import (
    BudgetExceededError,
    DimensionMismatchError,
    EmptyInputError,
    InternalConsistencyError,
    MorseEnsembleError,
    NotFoundError,
    ParameterError,
    PreconditionError,
    StructuralError,
)
from .polyring import (
    MorsePolynomial,
    add,
    coefficient,
    from_json,
    max_degree_in_var,
    min_total_degree,
    monomial,
    mul,
    one,
    pad_to,
    scale,
    specialize_all,
    to_json,
    zero,
)
from .complexes import (
    Graph,
    GradedPoset,
    Simplex,
    SimplicialComplex,
    boundary_simplex,
    clique_complex,
    complement,
    complete_graph,
    cycle_graph,
    dunce_hat,
    face_poset,
    from_facets,
    from_graph6,
    hypercube_graph,
    independence_complex,
    make_simplex,
    parse_edge_list,
    parse_facets_json,
    path_graph,
    puncture,
    rp2_6,
    simplex,
    skeleton,
    star_graph,
    to_graph6,
    torus_7,
)
from .homology import (
    BettiVector,
    betti,
    boundary_class_vanishes,
    boundary_matrix,
    matrix_rank,
    reduced_betti,
)
from .matchings import (
    canonical_pairs,
    count_matchings,
    count_with_critical,
    enumerate_me,
    enumerate_me_forced,
    find_collapsing_matching,
    is_acyclic,
    iter_acyclic_matchings,
    morse_vector,
)
from .spectral import (
    LaplacianCharPoly,
    TotalCountRecord,
    cartesian_me,
    cycle_me,
    dictionary_coefficient,
    fibonacci,
    forest_expansion_me,
    laplacian_det_poly,
    laplacian_me,
    lucas,
    path_me,
    perfect_count_graph,
    spanning_tree_count,
    total_count_identities,
    two_pair_coefficient_formula,
)
from .recursion import (
    Attachment,
    ObstructionRecord,
    bridge_recursion_me,
    correction_by_paths,
    correction_term,
    incidence_separated,
    leading_obstruction,
    liftable_term,
    naive_overcount,
    obstruction_paths,
    top_face_me,
)
from .perfectness import (
    OptimalRecursionRecord,
    PerfectRecursionRecord,
    ReductionMove,
    ReductionResult,
    betti_target,
    classify_attachment,
    find_reduction_sequence,
    optimal_count,
    optimal_count_recursion_check,
    perfect_coefficient,
    perfect_coefficient_recursion_check,
    reduction_from_json,
    reduction_iff_perfect_check,
    reduction_to_json,
    replay_reduction,
)
from .invariants import (
    IndependencePolynomial,
    SeparationRow,
    TuttePolynomial,
    cospectral,
    independence_me,
    independence_poly,
    independence_recovers_complement_check,
    separation_report,
    skeleton_degree_sequence,
    tutte,
)
from .fixtures import (
    FIXTURES,
    attachment_corpus,
    chorded_cycle_attachment,
    cone_disk,
    cospectral_pair,
    cycle_closure,
    fixture,
    fixture_names,
    matroid_twin_pair,
    tetrahedron_filtration,
    triangle_filtration,
    two_triangle_attachment,
    whitney_pair,
)

__version__ = "0.1.0"
