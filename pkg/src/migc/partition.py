"""Maximum-entropy partition search for unconstrained querying.

Finding the admissible partition with the largest answer entropy is the
inner loop of the greedy tree builder when every D-ary partition is
allowed. Exact search is a depth-first branch and bound over cell
assignments; the fallback heuristic packs symbols into the currently
lightest cell.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import fsum
from typing import Sequence

from .errors import BudgetExceeded, EmptyCandidates
from .model import PartitionView


@dataclass(frozen=True)
class SearchBudget:
    """Caps the exact search and selects between exact and heuristic modes.

    In ``auto`` mode exact search runs iff D^k (k = candidate count) does
    not exceed ``exact_state_limit``; ``exact`` raises BudgetExceeded past
    the limit instead of silently degrading.
    """

    exact_state_limit: int = 1 << 24
    mode: str = "auto"

    def __post_init__(self) -> None:
        if self.exact_state_limit < 1:
            raise ValueError("exact_state_limit must be at least 1")
        if self.mode not in ("exact", "heuristic", "auto"):
            raise ValueError(f"unknown search mode {self.mode!r}")


DEFAULT_BUDGET = SearchBudget()


def _nat_entropy(masses: Sequence[float]) -> float:
    return fsum(-m * math.log(m) for m in masses if m > 0.0)


def _greedy_balanced(masses: Sequence[float], d: int) -> list[int]:
    """Assign each symbol (given in descending-mass order) to the currently
    lightest cell; ties go to the lowest cell index."""
    cells = [0.0] * d
    assign: list[int] = []
    for m in masses:
        c = min(range(d), key=lambda j: cells[j])
        assign.append(c)
        cells[c] += m
    return assign


def _branch_and_bound(masses: list[float], d: int) -> list[int]:
    """Lexicographically-smallest assignment maximizing partition entropy.

    Symbols arrive in descending-mass order. Symmetry is broken by only
    ever opening the first unused cell, so assignments are canonical; the
    first maximum found in DFS order is the lexicographically smallest.
    """
    k = len(masses)
    suffix = [0.0] * (k + 1)
    tail_h = [0.0] * (k + 1)  # entropy contribution if the tail goes to fresh cells
    for i in range(k - 1, -1, -1):
        suffix[i] = suffix[i + 1] + masses[i]
        tail_h[i] = tail_h[i + 1] - masses[i] * math.log(masses[i])

    # Prime the incumbent with the greedy value, minus a sliver so that
    # assignments tying the greedy optimum are still reachable in lex order.
    greedy_cells = [0.0] * d
    for pos, c in enumerate(_greedy_balanced(masses, d)):
        greedy_cells[c] += masses[pos]
    best_h = _nat_entropy(greedy_cells) - 1e-12
    best: list[int] | None = None

    assign = [0] * k
    cells = [0.0] * d
    log = math.log

    def walk(i: int, used: int) -> None:
        nonlocal best_h, best
        if k - i <= d - used:
            # Every remaining symbol fits in a fresh cell, which strictly
            # beats any shared placement (splitting a cell raises entropy).
            h = _nat_entropy(cells[:used]) + tail_h[i]
            if h > best_h:
                best_h = h
                best = assign[:i] + list(range(used, used + (k - i)))
            return
        # Upper bound: water-fill the remaining mass continuously.
        remaining = suffix[i]
        vals = sorted(cells)
        prefix = 0.0
        bound = 0.0
        for t in range(1, d + 1):
            prefix += vals[t - 1]
            level = (remaining + prefix) / t
            if t == d or level <= vals[t]:
                bound = -t * level * log(level)
                for j in range(t, d):
                    v = vals[j]
                    if v > 0.0:
                        bound -= v * log(v)
                break
        if bound <= best_h:
            return
        m_i = masses[i]
        top = used + 1 if used < d else d
        tried: list[float] = []
        for c in range(top):
            v = cells[c]
            if v in tried:
                continue  # equal-mass cells are interchangeable
            tried.append(v)
            cells[c] = v + m_i
            assign[i] = c
            walk(i + 1, used + 1 if c == used else used)
            cells[c] = v

    walk(0, 0)
    assert best is not None
    return best


def optimal_partition_unconstrained(
    candidates: Sequence[int],
    masses: Sequence[float],
    d: int,
    budget: SearchBudget = DEFAULT_BUDGET,
) -> PartitionView:
    """Partition candidates into at most ``d`` cells maximizing entropy.

    ``masses`` are the conditional masses of the candidates (summing to 1).
    The result is tagged with the search method that produced it; ties
    resolve to the lexicographically smallest assignment over symbols in
    descending-mass order, so repeated runs agree exactly.
    """
    cand = [int(c) for c in candidates]
    m = [float(x) for x in masses]
    k = len(cand)
    if k == 0:
        raise EmptyCandidates("candidate set is empty")
    if d < 2:
        raise ValueError("arity d must be at least 2")
    order = sorted(range(k), key=lambda i: (-m[i], cand[i]))
    if k <= d:
        cells = tuple(frozenset({cand[i]}) for i in order)
        cell_masses = tuple(m[i] for i in order)
        return PartitionView(
            cells, cell_masses, method="exact", answer_indices=tuple(range(k))
        )
    mode = budget.mode
    space = d**k
    if mode == "auto":
        mode = "exact" if space <= budget.exact_state_limit else "heuristic"
    elif mode == "exact" and space > budget.exact_state_limit:
        raise BudgetExceeded(
            f"{d}^{k} assignment states exceed the limit {budget.exact_state_limit}"
        )
    sorted_masses = [m[i] for i in order]
    if mode == "exact":
        assign = _branch_and_bound(sorted_masses, d)
    else:
        assign = _greedy_balanced(sorted_masses, d)
    n_cells = max(assign) + 1
    groups: list[list[int]] = [[] for _ in range(n_cells)]
    for pos, c in enumerate(assign):
        groups[c].append(pos)
    cells = tuple(frozenset(cand[order[p]] for p in grp) for grp in groups)
    cell_masses = tuple(fsum(sorted_masses[p] for p in grp) for grp in groups)
    return PartitionView(
        cells, cell_masses, method=mode, answer_indices=tuple(range(n_cells))
    )
