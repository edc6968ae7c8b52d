"""Two-gene interval-probing detection.

Two genes sit on distinct exons of a chain of N exons. One probe covers a
contiguous interval of exons and reports which of the two genes it caught:
gene A only, gene B only, both, or neither. The goal is to pin down both
positions in the fewest probes. The binary baseline collapses the answer
to "caught at least one gene" versus "neither", which can no longer tell
(a, b) from (b, a), so it identifies the unordered position pair instead.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from math import fsum
from typing import TextIO

import numpy as np

from ..coders import brute_force_optimal, migc_build
from ..infogain import expected_length
from ..model import Distribution, QuerySet, make_query_set, validate_distribution
from ..partition import DEFAULT_BUDGET, SearchBudget
from ..rng import rng_for
from .coding import sample_simplex

STREAM_DNA = 2


@dataclass(frozen=True)
class DnaInstance:
    """Ordered-pair target space and the 4-ary interval query pool."""

    n_exons: int
    targets: tuple[tuple[int, int], ...]  # (exon of gene A, exon of gene B), 1-based
    intervals: tuple[tuple[int, int], ...]  # inclusive interval per query id
    qset: QuerySet


def dna_instance(n: int) -> DnaInstance:
    """All ordered placements of two genes on distinct exons, with every
    contiguous interval as an admissible 4-answer probe."""
    if n < 2:
        raise ValueError("need at least 2 exons")
    targets = [(a, b) for a in range(1, n + 1) for b in range(1, n + 1) if a != b]
    intervals = [(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]
    cells_list = []
    for i, j in intervals:
        a_only: list[int] = []
        b_only: list[int] = []
        both: list[int] = []
        neither: list[int] = []
        for t, (a, b) in enumerate(targets):
            in_a = i <= a <= j
            in_b = i <= b <= j
            if in_a and in_b:
                both.append(t)
            elif in_a:
                a_only.append(t)
            elif in_b:
                b_only.append(t)
            else:
                neither.append(t)
        cells_list.append([a_only, b_only, both, neither])
    qset = make_query_set(4, len(targets), cells_list)
    return DnaInstance(n, tuple(targets), tuple(intervals), qset)


@dataclass(frozen=True)
class DnaBinaryInstance:
    """Unordered position pairs probed with hit/miss interval answers."""

    n_exons: int
    targets: tuple[tuple[int, int], ...]  # (low exon, high exon)
    qset: QuerySet


def dna_binary_instance(n: int) -> DnaBinaryInstance:
    if n < 2:
        raise ValueError("need at least 2 exons")
    targets = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)]
    intervals = [(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]
    cells_list = []
    for i, j in intervals:
        hit = [
            t
            for t, (a, b) in enumerate(targets)
            if i <= a <= j or i <= b <= j
        ]
        cells_list.append([hit])  # complement (miss) appended at canonicalization
    qset = make_query_set(2, len(targets), cells_list)
    return DnaBinaryInstance(n, tuple(targets), qset)


def _collapse_to_unordered(
    dist: Distribution, targets: tuple[tuple[int, int], ...]
) -> Distribution:
    pair_mass: dict[tuple[int, int], list[float]] = {}
    for (a, b), p in zip(targets, dist.probs):
        key = (min(a, b), max(a, b))
        pair_mass.setdefault(key, []).append(p)
    keys = sorted(pair_mass)
    return validate_distribution(
        [f"{a}~{b}" for a, b in keys], [fsum(pair_mass[k]) for k in keys]
    )


@dataclass(frozen=True)
class DnaBenchResult:
    n_exons: int
    samples: int
    seed: int
    rows: tuple[tuple[int, float, float, float], ...]  # (sample, migc, bruteforce, gbsc)

    @property
    def gaps(self) -> np.ndarray:
        return np.array([m - b for _, m, b, _ in self.rows])

    def gap_quantile(self, q: float) -> float:
        return float(np.quantile(self.gaps, q))

    @property
    def mean_migc(self) -> float:
        return fsum(m for _, m, _, _ in self.rows) / len(self.rows)

    @property
    def mean_bruteforce(self) -> float:
        return fsum(b for _, _, b, _ in self.rows) / len(self.rows)

    @property
    def mean_gbsc(self) -> float:
        return fsum(g for _, _, _, g in self.rows) / len(self.rows)


def dna_bench(
    n: int, samples: int, seed: int, budget: SearchBudget = DEFAULT_BUDGET
) -> DnaBenchResult:
    """Expected probe counts of the greedy coder, the exact optimum, and the
    binary baseline over random target distributions."""
    inst = dna_instance(n)
    binary = dna_binary_instance(n)
    rows: list[tuple[int, float, float, float]] = []
    for s in range(samples):
        base = sample_simplex(len(inst.targets), rng_for(seed, STREAM_DNA, n, s))
        dist = validate_distribution(
            [f"{a}:{b}" for a, b in inst.targets], list(base.probs)
        )
        migc_len = expected_length(migc_build(dist, inst.qset, budget), dist).expected_length
        brute_len = brute_force_optimal(dist, inst.qset, budget)[0].expected_length
        dist_u = _collapse_to_unordered(dist, inst.targets)
        gbsc_len = expected_length(
            migc_build(dist_u, binary.qset, budget), dist_u
        ).expected_length
        rows.append((s, migc_len, brute_len, gbsc_len))
    return DnaBenchResult(n, samples, seed, tuple(rows))


def write_dna_csv(result: DnaBenchResult, out: TextIO) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["sample", "migc", "bruteforce", "gbsc"])
    for row in result.rows:
        writer.writerow(row)
