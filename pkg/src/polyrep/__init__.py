"""Sums of generalized polygonal numbers.

P_m(x) = ((m-2)x^2 - (m-4)x)/2 over all integers x.  The package builds
explicit representations, checks forms exhaustively up to a bound, and
compares closed-form minimal lengths with what the search finds.
"""

from .constructive import (
    ShapedRepresentation,
    guy_lower,
    represent_multiple,
    represent_r1,
    represent_repeat_large,
    represent_repeat_small,
    solve_quaternary,
)
from .errors import DomainError, InvariantError, ResourceLimitError
from .gonal import (
    Representation,
    RepeatShape,
    WeightedForm,
    eval_form,
    eval_pm,
    invert_pm,
    values_upto,
)
from .minimality import (
    TheoremValue,
    WitnessReport,
    cross_check,
    ell_repeat_theorem,
    ell_theorem,
    gamma_witness,
    reference_gamma,
)
from .oracle import (
    GapReport,
    ReachabilityTable,
    count_reps,
    empirical_min_len,
    find_representation,
    first_gap,
    reach_table,
)

__all__ = [
    "DomainError",
    "GapReport",
    "InvariantError",
    "ReachabilityTable",
    "RepeatShape",
    "Representation",
    "ResourceLimitError",
    "ShapedRepresentation",
    "TheoremValue",
    "WeightedForm",
    "WitnessReport",
    "count_reps",
    "cross_check",
    "ell_repeat_theorem",
    "ell_theorem",
    "empirical_min_len",
    "eval_form",
    "eval_pm",
    "find_representation",
    "first_gap",
    "gamma_witness",
    "guy_lower",
    "invert_pm",
    "reach_table",
    "reference_gamma",
    "represent_multiple",
    "represent_r1",
    "represent_repeat_large",
    "represent_repeat_small",
    "solve_quaternary",
    "values_upto",
]
