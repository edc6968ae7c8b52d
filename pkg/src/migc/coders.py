"""Tree-construction algorithms and coding baselines.

``migc_build`` grows the identification tree greedily, always asking the
admissible query whose induced partition has maximum entropy; with arity 2
this is exactly greedy binary separation. ``huffman_dary`` and
``shannon_dary`` are the classical baselines, and ``brute_force_optimal``
is the exact oracle for constrained instances.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from math import fsum
from typing import Sequence

from .errors import (
    InfeasibleQuerySet,
    KraftViolation,
    TooLarge,
    UnsupportedQuerySet,
)
from .infogain import entropy_of_masses, expected_length, induced_partition
from .model import (
    CodeReport,
    DecisionTree,
    Distribution,
    Internal,
    Leaf,
    Node,
    PartitionView,
    Query,
    QuerySet,
)
from .partition import DEFAULT_BUDGET, SearchBudget, optimal_partition_unconstrained

#: Coders selectable by name on the command line and over the wire.
CODER_NAMES = ("migc", "gbsc", "huffman", "shannon", "bruteforce")


def migc_build(
    dist: Distribution, qset: QuerySet, budget: SearchBudget = DEFAULT_BUDGET
) -> DecisionTree:
    """Grow the maximum-information-gain tree top-down.

    At every node with two or more surviving symbols, pick the admissible
    query whose induced partition has the largest entropy (ties: lowest
    query id) and recurse into the nonempty cells. Unconstrained query
    sets search all partitions via ``optimal_partition_unconstrained`` and
    record the chosen partitions as virtual queries on the tree.
    """
    if qset.n_symbols != dist.n:
        raise ValueError("query set and distribution disagree on symbol count")
    d = qset.d
    if dist.n == 1:
        return DecisionTree(Leaf(0), 1, d, ())

    if qset.unconstrained:
        virtual: list[Query] = []

        def grow_free(cand: frozenset[int]) -> Node:
            if len(cand) == 1:
                return Leaf(next(iter(cand)))
            idx = sorted(cand)
            total = fsum(dist.probs[i] for i in idx)
            view = optimal_partition_unconstrained(
                idx, [dist.probs[i] / total for i in idx], d, budget
            )
            query = Query(len(virtual), view.cells)
            virtual.append(query)
            children = {j: grow_free(cell) for j, cell in enumerate(view.cells)}
            return Internal(query, children)

        root = grow_free(frozenset(range(dist.n)))
        return DecisionTree(root, dist.n, d, tuple(virtual))

    def grow(cand: frozenset[int]) -> Node:
        if len(cand) == 1:
            return Leaf(next(iter(cand)))
        best_q: Query | None = None
        best_view: PartitionView | None = None
        best_h = -1.0
        for q in qset.queries:  # ascending id, so ties keep the lowest id
            view = induced_partition(q, cand, dist)
            if len(view.cells) < 2:
                continue
            h = entropy_of_masses(view.masses, d)
            if h > best_h:
                best_h = h
                best_q = q
                best_view = view
        if best_q is None or best_view is None:
            raise InfeasibleQuerySet(
                f"no admissible query splits candidates {sorted(cand)}"
            )
        children = {
            a: grow(cell)
            for a, cell in zip(best_view.answer_indices or (), best_view.cells)
        }
        return Internal(best_q, children)

    root = grow(frozenset(range(dist.n)))
    return DecisionTree(root, dist.n, d, qset.queries)


def gbsc_build(
    dist: Distribution, qset: QuerySet, budget: SearchBudget = DEFAULT_BUDGET
) -> DecisionTree:
    """Greedy binary separation: the arity-2 special case of migc_build."""
    if qset.d != 2:
        raise UnsupportedQuerySet("gbsc requires a query set of arity 2")
    return migc_build(dist, qset, budget)


class _HuffNode:
    __slots__ = ("mass", "symbol", "children")

    def __init__(self, mass: float, symbol: int | None, children: list["_HuffNode"]):
        self.mass = mass
        self.symbol = symbol  # real symbol index, None for dummies and merges
        self.children = children


def huffman_dary(dist: Distribution, d: int) -> tuple[CodeReport, DecisionTree]:
    """Classic bottom-up merge coding with zero-mass dummy padding.

    Dummies make the final merge full, i.e. (N' - 1) mod (D - 1) = 0, and
    are stripped from the resulting tree and report. Merge ties break by
    insertion order so repeated runs agree exactly.
    """
    if d < 2:
        raise ValueError("arity d must be at least 2")
    n = dist.n
    if n == 1:
        tree = DecisionTree(Leaf(0), 1, d, ())
        return expected_length(tree, dist), tree

    heap: list[tuple[float, int, _HuffNode]] = []
    serial = 0
    for i in range(n):
        heapq.heappush(heap, (dist.probs[i], serial, _HuffNode(dist.probs[i], i, [])))
        serial += 1
    pad = (1 - n) % (d - 1)
    for _ in range(pad):
        heapq.heappush(heap, (0.0, serial, _HuffNode(0.0, None, [])))
        serial += 1
    while len(heap) > 1:
        merged = [heapq.heappop(heap) for _ in range(d)]
        children = [node for _, _, node in merged]
        mass = fsum(m for m, _, _ in merged)
        heapq.heappush(heap, (mass, serial, _HuffNode(mass, None, children)))
        serial += 1
    root = heap[0][2]

    def symbols_under(node: _HuffNode) -> frozenset[int]:
        if not node.children:
            return frozenset() if node.symbol is None else frozenset({node.symbol})
        return frozenset().union(*(symbols_under(c) for c in node.children))

    queries: list[Query] = []

    def convert(node: _HuffNode) -> Node:
        if not node.children:
            assert node.symbol is not None
            return Leaf(node.symbol)
        live = [(c, symbols_under(c)) for c in node.children]
        live = [(c, syms) for c, syms in live if syms]
        if len(live) == 1:  # only possible if the padding rule broke
            return convert(live[0][0])
        query = Query(len(queries), tuple(syms for _, syms in live))
        queries.append(query)
        children = {j: convert(child) for j, (child, _) in enumerate(live)}
        return Internal(query, children)

    tree = DecisionTree(convert(root), n, d, tuple(queries))
    return expected_length(tree, dist), tree


def shannon_dary(dist: Distribution, d: int) -> CodeReport:
    """Per-symbol lengths ceil(log_d(1/p)) with canonical codewords.

    The ceiling is computed with exact rational arithmetic so dyadic and
    triadic masses land on the right integer; the Kraft sum is verified
    exactly as a self-check.
    """
    if d < 2:
        raise ValueError("arity d must be at least 2")
    lengths: list[int] = []
    for p in dist.probs:
        exact = Fraction(p)
        length = 0
        power = 1
        while exact * power < 1:  # smallest l with p * d^l >= 1
            length += 1
            power *= d
        lengths.append(length)
    kraft = sum(Fraction(1, d**l) for l in lengths)
    if kraft > 1:
        raise KraftViolation(f"Kraft sum {float(kraft)} exceeds 1")

    codewords = [""] * dist.n
    value = 0
    prev_len: int | None = None
    for i in sorted(range(dist.n), key=lambda i: (lengths[i], i)):
        length = lengths[i]
        if prev_len is not None:
            value = (value + 1) * d ** (length - prev_len)
        prev_len = length
        digits = []
        v = value
        for _ in range(length):
            digits.append(str(v % d))
            v //= d
        if v:
            raise KraftViolation("canonical codeword overflow")
        codewords[i] = "".join(reversed(digits))

    expected = fsum(p * l for p, l in zip(dist.probs, lengths))
    h_d = entropy_of_masses(dist.probs, d)
    return CodeReport(tuple(lengths), expected, h_d, tuple(codewords))


def prefix_tree_from_codewords(
    codewords: Sequence[str], n_symbols: int, d: int
) -> DecisionTree:
    """Turn a prefix-free codeword list into the equivalent decision tree."""
    queries: list[Query] = []

    def build(symbols: list[int], depth: int) -> Node:
        if len(symbols) == 1 and len(codewords[symbols[0]]) == depth:
            return Leaf(symbols[0])
        groups: dict[int, list[int]] = {}
        for s in symbols:
            groups.setdefault(int(codewords[s][depth]), []).append(s)
        query = Query(
            len(queries), tuple(frozenset(groups[g]) for g in sorted(groups))
        )
        queries.append(query)
        children = {
            j: build(groups[g], depth + 1) for j, g in enumerate(sorted(groups))
        }
        return Internal(query, children)

    root = build(list(range(n_symbols)), 0)
    return DecisionTree(root, n_symbols, d, tuple(queries))


def _mass_tables(probs: Sequence[float]) -> tuple[list[float], list[float]]:
    """Subset-sum lookup tables over the low/high 16 bits of a candidate mask."""
    n = len(probs)
    lo_bits = min(n, 16)
    lo = [0.0] * (1 << lo_bits)
    for mask in range(1, 1 << lo_bits):
        low = mask & -mask
        lo[mask] = lo[mask ^ low] + probs[low.bit_length() - 1]
    hi_bits = max(n - 16, 0)
    hi = [0.0] * (1 << hi_bits)
    for mask in range(1, 1 << hi_bits):
        low = mask & -mask
        hi[mask] = hi[mask ^ low] + probs[16 + low.bit_length() - 1]
    return lo, hi


def brute_force_optimal(
    dist: Distribution, qset: QuerySet, budget: SearchBudget = DEFAULT_BUDGET
) -> tuple[CodeReport, DecisionTree]:
    """Exact minimum-expected-length strategy for a finite query set.

    Memoized recursion over candidate bitmasks: OPT(C) = 0 for singletons,
    else 1 + the mass-weighted OPT of the best splitting query's cells.
    Only candidate sets reachable from the root are ever visited, and ties
    go to the lowest query id.
    """
    if qset.unconstrained:
        raise ValueError("brute_force_optimal requires a finite query set")
    if qset.n_symbols != dist.n:
        raise ValueError("query set and distribution disagree on symbol count")
    n = dist.n
    if n > 32:
        raise TooLarge(f"{n} symbols exceed the 32-symbol brute-force cap")
    if n > 1 and not qset.queries:
        raise InfeasibleQuerySet("query set is empty")

    cell_masks: list[list[int]] = []
    for q in qset.queries:
        masks = []
        for cell in q.cells:
            m = 0
            for i in cell:
                m |= 1 << i
            masks.append(m)
        cell_masks.append(masks)

    lo_table, hi_table = _mass_tables(dist.probs)

    def mass(mask: int) -> float:
        return lo_table[mask & 0xFFFF] + hi_table[mask >> 16]

    memo: dict[int, tuple[float, int]] = {}
    limit = budget.exact_state_limit

    def solve(mask: int) -> float:
        cached = memo.get(mask)
        if cached is not None:
            return cached[0]
        if mask & (mask - 1) == 0:
            memo[mask] = (0.0, -1)
            return 0.0
        if len(memo) > limit:
            raise TooLarge("brute-force state count exceeded the budget")
        mask_mass = mass(mask)
        best_cost = float("inf")
        best_q = -1
        for qid, masks in enumerate(cell_masks):
            cells = [m & mask for m in masks]
            cells = [c for c in cells if c]
            if len(cells) < 2:
                continue
            cost = 1.0
            for c in cells:
                cost += (mass(c) / mask_mass) * solve(c)
            if cost < best_cost:
                best_cost = cost
                best_q = qid
        if best_q < 0:
            raise InfeasibleQuerySet(
                f"no query splits candidates {[i for i in range(n) if mask >> i & 1]}"
            )
        memo[mask] = (best_cost, best_q)
        return best_cost

    full = (1 << n) - 1
    optimum = solve(full)

    def rebuild(mask: int) -> Node:
        if mask & (mask - 1) == 0:
            return Leaf(mask.bit_length() - 1)
        qid = memo[mask][1]
        children = {
            a: rebuild(sub)
            for a, m in enumerate(cell_masks[qid])
            if (sub := m & mask)
        }
        return Internal(qset.queries[qid], children)

    tree = DecisionTree(rebuild(full), n, qset.d, qset.queries)
    report = expected_length(tree, dist)
    assert abs(report.expected_length - optimum) <= 1e-9
    return report, tree


def build_with_coder(
    name: str,
    dist: Distribution,
    qset: QuerySet,
    budget: SearchBudget = DEFAULT_BUDGET,
) -> tuple[CodeReport, DecisionTree, bool]:
    """Run the named coder; returns (report, tree, uses_virtual_queries)."""
    if name in ("migc", "gbsc"):
        tree = gbsc_build(dist, qset, budget) if name == "gbsc" else migc_build(dist, qset, budget)
        return expected_length(tree, dist), tree, qset.unconstrained
    if name == "huffman":
        if not qset.unconstrained:
            raise UnsupportedQuerySet("huffman coding needs an unconstrained query set")
        report, tree = huffman_dary(dist, qset.d)
        return report, tree, True
    if name == "shannon":
        if not qset.unconstrained:
            raise UnsupportedQuerySet("shannon coding needs an unconstrained query set")
        report = shannon_dary(dist, qset.d)
        assert report.codewords is not None
        tree = prefix_tree_from_codewords(report.codewords, dist.n, qset.d)
        return report, tree, True
    if name == "bruteforce":
        report, tree = brute_force_optimal(dist, qset, budget)
        return report, tree, False
    raise ValueError(f"unknown coder {name!r}; choose one of {CODER_NAMES}")
