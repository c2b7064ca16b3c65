"""Exact Seifert-matrix calculus and the chord-diagram algebra around it."""

from .seifert import (
    EMPTY, FIGURE_EIGHT, TREFOIL, SeifertMatrix, block_sum, congruent, enlarge_col,
    enlarge_row, perturb, random_s_moves, random_seifert, try_reduce, validate,
)
from .invariants import alexander, coeff, conway
from .filtration import (
    alternating_sum, conway_of_combination, evaluate, ft_degree_test, monomials, p_even,
    rank_experiment, unknotting_search,
)
from .diagrams import (
    canonicalize, code_string, enumerate_chords, quotient_dim, rank_mod_relations, relation_span,
    stu_reduce, wheel, wheel_monomial,
)

__version__ = "0.1.0"
