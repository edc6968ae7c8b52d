"""Information-theoretic primitives: masses, partition entropy, gain, lengths."""

from __future__ import annotations

import math
from math import fsum
from typing import Iterable, Sequence

from .errors import EmptyCandidates, InvalidTree, OutOfRangeIndex, OverlappingCells
from .model import (
    CodeReport,
    DecisionTree,
    Distribution,
    PartitionView,
    Query,
    tree_depths,
)


def total_probability(cell: Iterable[int], dist: Distribution) -> float:
    """Total mass of a symbol subset (compensated summation)."""
    terms = []
    for i in cell:
        if not 0 <= i < dist.n:
            raise OutOfRangeIndex(f"symbol index {i} outside 0..{dist.n - 1}")
        terms.append(dist.probs[i])
    return fsum(terms)


def entropy_of_masses(masses: Sequence[float], base: float) -> float:
    """Entropy of a mass vector; zero-mass terms contribute nothing."""
    acc = fsum(-m * math.log(m) for m in masses if m > 0.0)
    return acc / math.log(base)


def partition_entropy(
    cells: Iterable[Iterable[int]], dist: Distribution, base: float = 2.0
) -> float:
    """Entropy of the cell-mass vector, normalized over the union of cells."""
    seen: set[int] = set()
    cell_list = []
    for cell in cells:
        cs = set(cell)
        if cs & seen:
            raise OverlappingCells("partition cells overlap")
        seen |= cs
        cell_list.append(cs)
    total = total_probability(seen, dist)
    if total <= 0.0:
        return 0.0
    masses = [total_probability(c, dist) / total for c in cell_list]
    return entropy_of_masses(masses, base)


def induced_partition(
    query: Query, candidates: Iterable[int], dist: Distribution
) -> PartitionView:
    """Restrict a query to a candidate set: nonempty intersections with
    conditional masses, in the query's answer order."""
    cand = frozenset(candidates)
    if not cand:
        raise EmptyCandidates("candidate set is empty")
    total = total_probability(cand, dist)
    cells: list[frozenset[int]] = []
    masses: list[float] = []
    answers: list[int] = []
    for j, cell in enumerate(query.cells):
        inter = cell & cand
        if not inter:
            continue
        cells.append(inter)
        masses.append(fsum(dist.probs[i] for i in inter) / total)
        answers.append(j)
    return PartitionView(
        tuple(cells), tuple(masses), source_query=query.id, answer_indices=tuple(answers)
    )


def information_gain(
    query: Query, candidates: Iterable[int], dist: Distribution, base: float = 2.0
) -> float:
    """Mutual information between the symbol and the answer.

    Computed literally from the conditional-entropy decomposition
    H(X) - sum_j p_j H(X | answer j) on the distribution conditioned to the
    candidate set, NOT from the answer entropy; the two agree numerically,
    which the test suite checks as an invariant.
    """
    cand = sorted(set(candidates))
    if not cand:
        raise EmptyCandidates("candidate set is empty")
    total = total_probability(cand, dist)
    cond = {i: dist.probs[i] / total for i in cand}
    h_x = entropy_of_masses(list(cond.values()), base)
    h_given = 0.0
    for cell in query.cells:
        inter = [i for i in cand if i in cell]
        if not inter:
            continue
        p_j = fsum(cond[i] for i in inter)
        h_j = entropy_of_masses([cond[i] / p_j for i in inter], base)
        h_given += p_j * h_j
    return h_x - h_given


def expected_length(tree: DecisionTree, dist: Distribution) -> CodeReport:
    """Per-symbol depths and the expected number of queries for a tree."""
    if dist.n != tree.n_symbols:
        raise InvalidTree("distribution and tree disagree on symbol count")
    depths = tree_depths(tree)
    expected = fsum(p * depth for p, depth in zip(dist.probs, depths))
    h_d = entropy_of_masses(dist.probs, tree.arity)
    if expected < h_d - 1e-9:
        raise InvalidTree("expected length falls below the entropy lower bound")
    return CodeReport(tuple(depths), expected, h_d)
