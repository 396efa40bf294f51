"""Codes induced by alternative codes: decision procedures for finite languages."""
from .alternative import (
    AltVerdict,
    Decomposition,
    InvariantError,
    ProductVerdict,
    StrongVerdict,
    check_alternative,
    check_strong,
    check_unambiguous,
    induced_by_sufficiency,
    power_alt_induced,
    strong_condition_forms,
)
from .codes import (
    AmbiguityWitness,
    CodeClassReport,
    NotACodeError,
    SpTrace,
    ambiguity_witness,
    classify,
    is_bifix_code,
    is_code,
    is_maximal_bifix,
    is_maximal_prefix,
    is_maximal_suffix,
    is_prefix_code,
    is_suffix_code,
    is_thin,
    sardinas_patterson,
)
from .errors import BudgetExceeded
from .fic import (
    DecisionReport,
    SearchBudget,
    classify_standard_form,
    decide_alt_induced,
    enumerate_decompositions,
    enumerate_strong_decompositions,
    fic_search,
    gcd_pretest,
)
from .language import (
    Language,
    kraft_sum,
    left_quotient,
    partition_by_first_letter,
    power,
    product,
    proper_prefixes,
    proper_suffixes,
    reverse,
    right_quotient,
)

__version__ = "0.1.0"
