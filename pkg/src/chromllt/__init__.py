"""Chromatic quasisymmetric functions and unicellular LLT polynomials of
natural unit interval graphs, computed in exact arithmetic."""

__version__ = "0.1.0"

from .errors import ChromLLTError
from .qpoly import QPoly, exact_div, is_palindromic, q_factorial, q_int
from .symfunc import QuasiExpansion, SymExpansion, change_basis, multiply
from .unigraphs import (
    DyckDiagram,
    UnitIntervalGraph,
    complete,
    complete_deleted,
    disjoint_union,
    enumerate_nuio,
    glue_sum,
    lollipop,
    melting_lollipop,
    path,
)
from .chromaticq import (
    chromatic_bruteforce,
    x_complete,
    x_join_complete_complete,
    x_join_complete_lollipop,
    x_lollipop,
    x_melting_lollipop,
    x_path,
)
from .lltuni import hook_coefficient, inv_count, llt_bruteforce_words, llt_via_F, schur_via_wt
from .dsl import parse_graph_dsl
