"""Quivers, quantum tori on half lattices, quantum mutations and mapping class group words."""
from .quiver import Quiver, build_charts, kronecker, markov, mutate_quiver, permute_quiver, to_dot, x6, x7
from .torus import TorusElement, commutator_q
from .mutation import (
    MCGWord, Move, NotLaurentInChart, apply_word, dilog_conjugate, monomial_map, mut, mutate,
    parse_word, perm_move, permute, word_quiver,
)
from .traces import dehn_twists, trace_elements
from .checks import (
    Report, check_infinitesimal_dehn, classical_GA, classical_GB, classical_specialize, commuting_families,
    laurent_spotcheck, markov_permutation, mutation_words, negative_control, spotcheck_suite, verify_classical,
    verify_twist_lemmas, verify_x7_words,
)
