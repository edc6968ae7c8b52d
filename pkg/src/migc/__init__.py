"""Decision-constrained optimal querying.

Greedy maximum-information-gain decision trees for D-ary answer sets,
classical Huffman/Shannon baselines, an exact brute-force oracle,
benchmark scenarios, and an interactive query-session service.
"""

from .errors import (
    BudgetExceeded,
    ContradictoryAnswer,
    DuplicateLabel,
    EmptyCandidates,
    ImpossibleFleet,
    InfeasibleQuerySet,
    InvalidTree,
    KraftViolation,
    MassSumError,
    MigcError,
    NonPositiveMass,
    OutOfRangeIndex,
    OverlappingCells,
    SessionComplete,
    Solved,
    TooLarge,
    TooManyCells,
    UnknownSession,
    UnsupportedQuerySet,
)
from .model import (
    CodeReport,
    DecisionTree,
    Distribution,
    Internal,
    Leaf,
    PartitionView,
    Query,
    QuerySet,
    TreeVerdict,
    canonical_query,
    distinguishability_classes,
    make_query_set,
    query_set_from_json,
    query_set_to_json,
    tree_depths,
    tree_from_json,
    tree_to_dot,
    tree_to_json,
    tree_validate,
    validate_distribution,
)
from .infogain import (
    entropy_of_masses,
    expected_length,
    induced_partition,
    information_gain,
    partition_entropy,
    total_probability,
)
from .partition import DEFAULT_BUDGET, SearchBudget, optimal_partition_unconstrained
from .coders import (
    CODER_NAMES,
    build_with_coder,
    brute_force_optimal,
    gbsc_build,
    huffman_dary,
    migc_build,
    prefix_tree_from_codewords,
    shannon_dary,
)
from .rng import rng_for

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "CODER_NAMES",
    "CodeReport",
    "ContradictoryAnswer",
    "DEFAULT_BUDGET",
    "DecisionTree",
    "Distribution",
    "DuplicateLabel",
    "EmptyCandidates",
    "ImpossibleFleet",
    "InfeasibleQuerySet",
    "Internal",
    "InvalidTree",
    "KraftViolation",
    "Leaf",
    "MassSumError",
    "MigcError",
    "NonPositiveMass",
    "OutOfRangeIndex",
    "OverlappingCells",
    "PartitionView",
    "Query",
    "QuerySet",
    "SearchBudget",
    "SessionComplete",
    "Solved",
    "TooLarge",
    "TooManyCells",
    "TreeVerdict",
    "UnknownSession",
    "UnsupportedQuerySet",
    "brute_force_optimal",
    "build_with_coder",
    "canonical_query",
    "distinguishability_classes",
    "entropy_of_masses",
    "expected_length",
    "gbsc_build",
    "huffman_dary",
    "induced_partition",
    "information_gain",
    "make_query_set",
    "migc_build",
    "optimal_partition_unconstrained",
    "partition_entropy",
    "prefix_tree_from_codewords",
    "query_set_from_json",
    "query_set_to_json",
    "rng_for",
    "shannon_dary",
    "total_probability",
    "tree_depths",
    "tree_from_json",
    "tree_to_dot",
    "tree_to_json",
    "tree_validate",
    "validate_distribution",
]
