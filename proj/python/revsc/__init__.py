"""State complexity of the reverse of R-trivial and J-trivial languages."""

from ._core import (
    Dfa,
    binary_j_trivial_reverse_bound,
    complement,
    dead_states,
    default_letter_names,
    dfa_from_dot,
    dfa_from_json,
    dfa_to_dot,
    dfa_to_json,
    fig2_witness,
    fig5_witness,
    is_j_trivial,
    is_partially_ordered,
    is_r_trivial,
    j_trivial_alphabet_bound,
    minimize,
    r_trivial_reverse_bound,
    regex_to_min_dfa,
    reverse_state_complexity,
    state_complexity,
    table1_expression,
    table1_witness,
    worst_case_reverse,
)

__all__ = [
    "Dfa",
    "binary_j_trivial_reverse_bound",
    "complement",
    "dead_states",
    "default_letter_names",
    "dfa_from_dot",
    "dfa_from_json",
    "dfa_to_dot",
    "dfa_to_json",
    "fig2_witness",
    "fig5_witness",
    "is_j_trivial",
    "is_partially_ordered",
    "is_r_trivial",
    "j_trivial_alphabet_bound",
    "minimize",
    "r_trivial_reverse_bound",
    "regex_to_min_dfa",
    "reverse_state_complexity",
    "state_complexity",
    "table1_expression",
    "table1_witness",
    "worst_case_reverse",
]

__version__ = "0.1.0"
