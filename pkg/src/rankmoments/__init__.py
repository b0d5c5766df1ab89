"""Exact Dyson-rank statistics of integer partitions.

Rank distributions N(m, n), ordinary/positive/symmetrized rank moments,
k-marked Durfee symbols with their rank vectors and counts, exact truncated
q-series for all the associated generating functions, and a verification
suite that cross-checks enumeration against series coefficients and closed
forms. All arithmetic is exact (arbitrary-precision integers and rationals).
"""

from .config import CapExceededError
from .durfee import (
    MarkedDurfeeSymbol,
    Verdict,
    count_ith_rank_filtered,
    count_marked,
    count_with_rank_vector,
    enumerate_marked,
    rank_vector_tally,
    ranks,
    validate,
)
from .identities import (
    VerificationReport,
    verify_all,
    verify_andrews,
    verify_gf,
    verify_ji,
    verify_moment_relation,
    verify_negative_rank,
    verify_positive_rank,
    verify_solution_counts,
    verify_symmetry,
    verify_zero_rank,
)
from .moments import (
    MomentTable,
    binomial,
    linear_combination_check,
    ordinary_moment,
    positive_moment,
    solution_count,
    solution_count_formula,
    symmetrized_moment,
    symmetrized_positive_moment,
)
from .partitions import (
    EmptyPartitionError,
    Partition,
    RankDistribution,
    count_with_rank,
    enumerate_partitions,
    partition_count,
    rank,
    rank_distribution,
)
from .qseries import (
    LaurentPoly,
    TruncatedSeries,
    coefficient,
    eta_bar_even_gf,
    eta_bar_odd_gf,
    euler_product,
    invert_unit_series,
    marked_positive_rank_gf,
    marked_zero_rank_gf,
    rank_gf,
    series_add,
    series_mul,
)

__version__ = "0.1.0"

__all__ = [
    "CapExceededError",
    "EmptyPartitionError",
    "Partition",
    "RankDistribution",
    "enumerate_partitions",
    "rank",
    "rank_distribution",
    "count_with_rank",
    "partition_count",
    "LaurentPoly",
    "TruncatedSeries",
    "series_add",
    "series_mul",
    "euler_product",
    "invert_unit_series",
    "rank_gf",
    "eta_bar_odd_gf",
    "eta_bar_even_gf",
    "marked_zero_rank_gf",
    "marked_positive_rank_gf",
    "coefficient",
    "MarkedDurfeeSymbol",
    "Verdict",
    "validate",
    "ranks",
    "enumerate_marked",
    "count_marked",
    "rank_vector_tally",
    "count_with_rank_vector",
    "count_ith_rank_filtered",
    "binomial",
    "ordinary_moment",
    "positive_moment",
    "symmetrized_moment",
    "symmetrized_positive_moment",
    "linear_combination_check",
    "solution_count",
    "solution_count_formula",
    "MomentTable",
    "VerificationReport",
    "verify_andrews",
    "verify_zero_rank",
    "verify_positive_rank",
    "verify_negative_rank",
    "verify_ji",
    "verify_symmetry",
    "verify_gf",
    "verify_moment_relation",
    "verify_solution_counts",
    "verify_all",
    "__version__",
]
