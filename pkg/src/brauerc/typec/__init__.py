"""The Brauer monoid of type C_n through its image in symmetric diagrams on 2n strands."""

from .counting import count_closed, count_recursion, count_symmetric_matchings
from .normal_form import (
    NormalForm,
    b_monomial,
    e_root,
    e_root_word,
    e_set,
    normal_form_basis,
    normal_form_of,
    r_root,
    rewrite_eb,
)
from .weyl import (
    CosetData,
    WeylElement,
    WeylGroup,
    coset_decomposition,
    orbit_size,
    stabilizer_and_cosets,
    weyl_group,
)
from .words import (
    B_i,
    B_set,
    b_pip,
    b_word,
    e_strip,
    eval_C,
    op_word,
    parse_word_C,
    phi_word,
    y_word,
    z_word,
)
from ..relations import relation_suite_C

__all__ = [
    "B_i", "B_set", "CosetData", "NormalForm", "WeylElement", "WeylGroup",
    "b_monomial", "b_pip", "b_word", "coset_decomposition", "count_closed",
    "count_recursion", "count_symmetric_matchings", "e_root", "e_root_word",
    "e_set", "e_strip", "eval_C", "normal_form_basis", "normal_form_of",
    "op_word", "orbit_size", "parse_word_C", "phi_word", "r_root",
    "relation_suite_C", "rewrite_eb", "stabilizer_and_cosets", "weyl_group",
    "y_word", "z_word",
]
