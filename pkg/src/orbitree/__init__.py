"""Orbit trees, invariant measures and orbit matrices for groups generated
by finite Mealy automata acting on a regular rooted tree."""
from .automaton import (
    Alphabet,
    GroupWord,
    MealyAutomaton,
    Permutation,
    act_word,
    check_budget,
    cycle_lengths,
    decode_vertex,
    encode_vertex,
    invert,
    iter_level_permutations,
    level_permutation,
    permutation_order_at_level,
    section,
    vertex_budget,
)
from .dsl import format_automaton, format_group_word, parse_automaton, parse_group_word, parse_tree_word
from .errors import AutomatonSyntaxError, OrbitreeError, ResourceLimitError
from .measures import (
    InvariantMeasurePrefix,
    VertexMeasure,
    check_invariance,
    decomposition_failures,
    psi_prefix,
    random_invariant_measure,
    ray_measure,
    uniform_measure,
    verify_decomposition,
)
from .orbit_tree import OrbitTree, build_orbit_tree, is_level_transitive, to_dot, to_text
from .orbits import LevelOrbits, compute_level_orbits, iter_level_orbits, orbit_of_vertex
from .render import matrix_to_ascii, matrix_to_pbm, parse_pbm
from .series import orbit_matrix
from .shapes import match_shape, parse_shape

__all__ = [name for name in dir() if not name.startswith("_")]
