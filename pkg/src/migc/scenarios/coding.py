"""Random-distribution coding-length benchmark.

Draws distributions uniformly from the simplex and compares the expected
code lengths of Huffman, greedy max-gain, and Shannon coding, plus the
per-symbol length gaps at the largest symbol count.
"""

from __future__ import annotations

import csv
from collections import Counter
from dataclasses import dataclass, field
from math import fsum
from typing import TextIO

import numpy as np

from ..coders import huffman_dary, migc_build, shannon_dary
from ..infogain import expected_length
from ..model import Distribution, make_query_set, validate_distribution
from ..partition import DEFAULT_BUDGET, SearchBudget
from ..rng import rng_for

#: Stream tag separating this benchmark's draws from other scenarios.
STREAM_CODING = 1


@dataclass(frozen=True)
class BenchConfig:
    n_min: int
    n_max: int
    samples_per_n: int
    d: int = 3
    seed: int = 0
    budget: SearchBudget = DEFAULT_BUDGET

    def __post_init__(self) -> None:
        if not 2 <= self.n_min <= self.n_max:
            raise ValueError("need 2 <= n_min <= n_max")
        if self.samples_per_n < 1:
            raise ValueError("samples_per_n must be at least 1")
        if self.d < 2:
            raise ValueError("arity d must be at least 2")


def sample_simplex(n: int, rng: np.random.Generator) -> Distribution:
    """Uniform draw from the probability simplex: normalized unit exponentials."""
    if n < 1:
        raise ValueError("n must be at least 1")
    while True:
        draws = rng.standard_exponential(n)
        if np.all(draws > 0.0):
            break
    probs = draws / draws.sum()
    return validate_distribution(list(range(1, n + 1)), probs.tolist())


@dataclass(frozen=True)
class Fig5Result:
    """Mean lengths per symbol count plus per-symbol gaps at n_max."""

    config: BenchConfig
    rows: tuple[tuple[int, float, float, float], ...]
    gap_rows: tuple[tuple[int, int, int, int], ...]
    shannon_minus_migc: Counter = field(default_factory=Counter)
    migc_minus_huffman: Counter = field(default_factory=Counter)


def bench_fig5(config: BenchConfig) -> Fig5Result:
    rows: list[tuple[int, float, float, float]] = []
    gap_rows: list[tuple[int, int, int, int]] = []
    hist_sm: Counter = Counter()
    hist_mh: Counter = Counter()
    for n in range(config.n_min, config.n_max + 1):
        qset = make_query_set(config.d, n, unconstrained=True)
        h_lens: list[float] = []
        m_lens: list[float] = []
        s_lens: list[float] = []
        for s in range(config.samples_per_n):
            dist = sample_simplex(n, rng_for(config.seed, STREAM_CODING, n, s))
            h_rep, _ = huffman_dary(dist, config.d)
            m_rep = expected_length(migc_build(dist, qset, config.budget), dist)
            s_rep = shannon_dary(dist, config.d)
            h_lens.append(h_rep.expected_length)
            m_lens.append(m_rep.expected_length)
            s_lens.append(s_rep.expected_length)
            if n == config.n_max:
                for i in range(n):
                    gap_sm = s_rep.per_symbol_lengths[i] - m_rep.per_symbol_lengths[i]
                    gap_mh = m_rep.per_symbol_lengths[i] - h_rep.per_symbol_lengths[i]
                    gap_rows.append((s, i, gap_sm, gap_mh))
                    hist_sm[gap_sm] += 1
                    hist_mh[gap_mh] += 1
        count = config.samples_per_n
        rows.append((n, fsum(h_lens) / count, fsum(m_lens) / count, fsum(s_lens) / count))
    return Fig5Result(config, tuple(rows), tuple(gap_rows), hist_sm, hist_mh)


def write_fig5_csv(result: Fig5Result, out: TextIO) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["n", "mean_huffman", "mean_migc", "mean_shannon"])
    for row in result.rows:
        writer.writerow(row)


def write_gaps_csv(result: Fig5Result, out: TextIO) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["sample", "symbol", "shannon_minus_migc", "migc_minus_huffman"])
    for row in result.gap_rows:
        writer.writerow(row)
