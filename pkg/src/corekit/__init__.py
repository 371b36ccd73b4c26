"""Self-conjugate t-core partitions through their distinct-odd-parts partners."""

from .bijections import (
    distinct_odd_to_sc,
    perfectly_triangular,
    sc_to_distinct_odd,
    three_core_minus,
    three_core_plus,
)
from .classnumbers import QuadraticForm, hurwitz, reduced_forms, sc2_count, sc3_count, sc7_bkm, sc7_ono_raji
from .enumeration import (
    all_partitions,
    distinct_odd_partitions,
    distinct_partitions,
    odd_partitions,
    sc_t_count_bruteforce,
    sc_t_counts_bruteforce,
    self_conjugate_partitions,
)
from .errors import (
    BoxOutOfDiagram,
    CorekitError,
    InvalidModulus,
    NonIntegralResult,
    NonNegativeArgument,
    NonPositivePart,
    NotDistinctOdd,
    NotSelfConjugate,
    PreconditionViolated,
)
from .hooks import (
    HookTable,
    TCoreWitness,
    gap_criterion,
    hook_length_formula,
    hook_length_naive,
    hook_table,
    is_t_core_naive,
    is_t_core_sc,
    sc_hook_calc_count,
)
from .partitions import (
    DistinctOddPartition,
    Partition,
    conjugate,
    durfee_side,
    from_frequency,
    is_self_conjugate,
    make_distinct_odd,
    make_partition,
    parse_partition,
    to_frequency,
)
from .supernorm import (
    PrimeIndexer,
    SupernormImage,
    euler_count_pair,
    is_squarefree_odd_indexed,
    nth_prime,
    supernorm,
    supernorm_inverse,
    t_core_supernorm_set,
    two_core_supernorm_pair,
)

__version__ = "0.1.0"
