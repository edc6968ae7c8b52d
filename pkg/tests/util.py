"""Independent oracles and instance generators for the test suite.

Everything here recomputes expected values by direct enumeration, on
purpose sharing no code with the production implementations it checks.
"""

from __future__ import annotations

import math
from math import fsum

import numpy as np

from migc.model import Distribution, QuerySet, make_query_set, validate_distribution


def nat_entropy(masses) -> float:
    return fsum(-m * math.log(m) for m in masses if m > 0.0)


def exhaustive_optimal_length(dist: Distribution, qset: QuerySet) -> float:
    """Minimum expected query count by plain memoized recursion over
    frozenset candidate sets, trying every splitting query."""
    memo: dict[frozenset, float] = {}

    def mass(cand):
        return fsum(dist.probs[i] for i in cand)

    def go(cand: frozenset) -> float:
        if len(cand) == 1:
            return 0.0
        if cand in memo:
            return memo[cand]
        total = mass(cand)
        best = math.inf
        for q in qset.queries:
            cells = [cell & cand for cell in q.cells]
            cells = [c for c in cells if c]
            if len(cells) < 2:
                continue
            cost = 1.0 + sum(mass(c) / total * go(c) for c in cells)
            best = min(best, cost)
        memo[cand] = best
        return best

    return go(frozenset(range(dist.n)))


def all_assignments(k: int, d: int):
    """Every canonical assignment of k items to at most d unlabeled cells."""

    def rec(i: int, used: int, acc: list[int]):
        if i == k:
            yield tuple(acc)
            return
        for c in range(min(used + 1, d)):
            acc.append(c)
            yield from rec(i + 1, max(used, c + 1), acc)
            acc.pop()

    yield from rec(0, 0, [])


def exhaustive_max_entropy(masses, d: int) -> float:
    """Maximum partition entropy (nats) over every assignment."""
    best = -1.0
    for assign in all_assignments(len(masses), d):
        cells = [0.0] * (max(assign) + 1)
        for pos, c in enumerate(assign):
            cells[c] += masses[pos]
        best = max(best, nat_entropy(cells))
    return best


def min_tree_length_unconstrained(dist: Distribution, d: int) -> float:
    """Minimum expected depth over every D-ary tree, by enumerating all
    partitions of each candidate set into 2..d nonempty cells."""
    memo: dict[frozenset, float] = {}

    def partitions(items: tuple[int, ...], max_cells: int):
        if len(items) == 1:
            yield [frozenset(items)]
            return
        first, rest = items[0], items[1:]
        for sub in partitions(rest, max_cells):
            for i in range(len(sub)):
                yield sub[:i] + [sub[i] | {first}] + sub[i + 1 :]
            if len(sub) < max_cells:
                yield sub + [frozenset({first})]

    def go(cand: frozenset) -> float:
        if len(cand) == 1:
            return 0.0
        if cand in memo:
            return memo[cand]
        total = fsum(dist.probs[i] for i in cand)
        best = math.inf
        for cells in partitions(tuple(sorted(cand)), d):
            if len(cells) < 2:
                continue
            cost = 1.0 + sum(
                fsum(dist.probs[i] for i in c) / total * go(c) for c in cells
            )
            best = min(best, cost)
        memo[cand] = best
        return best

    return go(frozenset(range(dist.n)))


def greedy_by_exhaustive_partition(dist: Distribution, d: int) -> dict[int, int]:
    """Greedy max-entropy tree built with brute-force partition search;
    returns per-symbol depths. Ties: lexicographically smallest canonical
    assignment over symbols in descending-mass order."""
    depths: dict[int, int] = {}

    def best_partition(cand: list[int]) -> list[frozenset]:
        order = sorted(cand, key=lambda i: (-dist.probs[i], i))
        masses = [dist.probs[i] for i in order]
        best_h = -1.0
        best_cells: list[frozenset] = []
        for assign in all_assignments(len(order), d):
            cells_mass = [0.0] * (max(assign) + 1)
            for pos, c in enumerate(assign):
                cells_mass[c] += masses[pos]
            h = nat_entropy(cells_mass)
            if h > best_h + 1e-15:
                best_h = h
                groups: dict[int, set] = {}
                for pos, c in enumerate(assign):
                    groups.setdefault(c, set()).add(order[pos])
                best_cells = [frozenset(groups[c]) for c in sorted(groups)]
        return best_cells

    def walk(cand: list[int], depth: int) -> None:
        if len(cand) == 1:
            depths[cand[0]] = depth
            return
        for cell in best_partition(cand):
            walk(sorted(cell), depth + 1)

    walk(list(range(dist.n)), 0)
    return depths


def random_distribution(rng: np.random.Generator, n: int) -> Distribution:
    draws = rng.standard_exponential(n)
    return validate_distribution(list(range(n)), (draws / draws.sum()).tolist())


def random_query_set(
    rng: np.random.Generator, n: int, d: int, n_queries: int
) -> QuerySet:
    """Random constrained query set covering the universe per query."""
    cells_list = []
    for _ in range(n_queries):
        assign = rng.integers(0, d, size=n)
        groups: dict[int, list[int]] = {}
        for i, c in enumerate(assign):
            groups.setdefault(int(c), []).append(i)
        cells_list.append([groups[c] for c in sorted(groups)])
    return make_query_set(d, n, cells_list)


def feasible_random_query_set(
    rng: np.random.Generator, n: int, d: int, n_queries: int
) -> QuerySet:
    """Resample until every pair of symbols is separated by some query.

    k queries distinguish at most d^k symbols, so the requested count is
    raised to that floor first; otherwise no draw could ever succeed.
    """
    from migc.model import distinguishability_classes

    floor = 1
    while d**floor < n:
        floor += 1
    n_queries = max(n_queries, floor + 1)
    while True:
        qset = random_query_set(rng, n, d, n_queries)
        if all(len(c) == 1 for c in distinguishability_classes(qset)):
            return qset


def sample_random_valid_tree(rng: np.random.Generator, dist, qset):
    """A uniform-ish random valid identification tree: at each node pick a
    random splitting query."""
    from migc.model import DecisionTree, Internal, Leaf

    def grow(cand: frozenset):
        if len(cand) == 1:
            return Leaf(next(iter(cand)))
        splitting = []
        for q in qset.queries:
            cells = [cell & cand for cell in q.cells]
            if sum(1 for c in cells if c) >= 2:
                splitting.append(q)
        q = splitting[int(rng.integers(0, len(splitting)))]
        children = {
            a: grow(cell & cand)
            for a, cell in enumerate(q.cells)
            if cell & cand
        }
        return Internal(q, children)

    return DecisionTree(grow(frozenset(range(dist.n))), dist.n, qset.d, qset.queries)
