"""Minimal graded free resolutions of powers of lexsegment ideals with
linear quotients, with independent verification layers."""

from .monomials import (
    BarTildeSplit,
    Monomial,
    RingContext,
    bar_degree,
    bar_tilde_split,
    cmp_lex,
    cmp_prec,
    cmp_revlex,
    min_tilde_index,
    monomial_from_exponents,
    one,
    variable,
)
from .lexsegment import (
    Classification,
    CompletelyLexVerdict,
    LexSegmentSpec,
    TransformRecord,
    classify_linear_form,
    enumerate_lexsegment,
    is_completely_lexsegment,
    is_lexsegment_set,
    make_classified_spec,
    normalize_spec,
    shadow,
)
from .powers import PowerIdeal, power_generators, prefix_membership
from .quotients import (
    QuotientStructure,
    colon_minimal_generators,
    linear_quotients_check,
    set_cardinality_profile,
    set_bound_report,
)
from .decomposition import (
    DecompositionContext,
    DecompositionRecord,
    RegularityReport,
    closed_form_matches_oracle,
    g_closed_form,
    g_oracle,
    g_oracle_index,
    regularity_check,
    regularity_check_oracle,
)
from .resolution import (
    BasisSymbol,
    ResolutionComplex,
    SignedVariableEntry,
    SignedVariableMatrix,
    assemble_resolution,
    betti_from_sets,
    betti_numbers,
    compose_check,
    compose_check_all,
    minimality_check,
    resolution_basis,
)
from .verify import (
    HilbertNumerator,
    RankReport,
    euler_characteristic_numerator,
    euler_check,
    hilbert_numerator,
    hilbert_numerator_inclusion_exclusion,
    random_rank_check,
)
from .errors import BudgetError

__all__ = [name for name in dir() if not name.startswith("_")]
