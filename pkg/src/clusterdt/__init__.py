"""Exact cluster structures on double Bruhat cells of GL_n and their
Donaldson-Thomas transformation, realized three independent ways and
certified by the tropical degree criterion."""

from .cluster import (
    ClusterAssignment,
    Seed,
    TransformationPlan,
    apply_iso,
    mutate_A,
    mutate_seed,
    mutate_X,
    p_map,
    run_plan,
    x_involution,
)
from .dtengine import (
    CellPoint,
    DegreeMatrix,
    amalgamate,
    dt_closed_form,
    dt_pullback,
    equal_up_to_diagonals,
    face_minors,
    plan_dt_sequence,
    symbolic_values,
    tropical_dt_check,
    twist_pullback,
    twist_squared_is_identity,
    verify_move_diagrams,
    x_coords,
)
from .exactalg import (
    LaurentPoly,
    RatFunc,
    RFMatrix,
    TropicalPoint,
    gauss_decompose,
    generator,
    lift_weyl,
    minor,
    star,
    top_degree,
    trop_eval,
)
from .plabic import (
    BipartiteGraph,
    Face,
    PathFamily,
    ZigZag,
    boundary_measurement,
    build_graph,
    build_quivers,
    dominating_sets,
    lgv_minor,
    max_path_family,
)
from .weyl import (
    Permutation,
    SignedWord,
    WordMove,
    all_reduced_words,
    apply_move,
    greedy_pair_word,
    greedy_word,
    move_mutates,
    move_path,
    moves_of,
    word_to_permutations,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
