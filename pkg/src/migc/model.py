"""Domain types for decision-constrained identification problems.

A :class:`Distribution` assigns positive probability mass to labeled
symbols. A :class:`Query` maps the symbol universe into disjoint answer
cells, and a :class:`QuerySet` is the admissible pool of such queries for
one problem instance. A :class:`DecisionTree` identifies a symbol by
walking answers from the root; the depth of a symbol's leaf is its code
length in base-D digits.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import fsum
from typing import Any, Iterable, Mapping, Sequence, Union

from .errors import (
    DuplicateLabel,
    InvalidTree,
    MassSumError,
    NonPositiveMass,
    OutOfRangeIndex,
    OverlappingCells,
    TooManyCells,
)

#: Tolerance for floating equality of mass sums.
MASS_ATOL = 1e-9
#: Deviations of the raw mass sum from 1 up to this much are renormalized away.
RENORM_TOL = 1e-6


@dataclass(frozen=True)
class Distribution:
    """Positive probability masses over uniquely labeled symbols."""

    labels: tuple[Any, ...]
    probs: tuple[float, ...]

    @property
    def n(self) -> int:
        return len(self.labels)

    def index_of(self, label: Any) -> int:
        return self.labels.index(label)

    def to_json(self) -> dict:
        return {"labels": list(self.labels), "probs": list(self.probs)}

    @staticmethod
    def from_json(data: Mapping, *, allow_zero: bool = False) -> "Distribution":
        return validate_distribution(data["labels"], data["probs"], allow_zero=allow_zero)


def validate_distribution(
    labels: Iterable[Any], probs: Iterable[float], *, allow_zero: bool = False
) -> Distribution:
    """Check and canonicalize raw ``(labels, probs)`` into a Distribution.

    Masses must be strictly positive and sum to 1 within ``RENORM_TOL``;
    small deviations are renormalized away. With ``allow_zero`` zero-mass
    symbols are dropped before validation instead of rejected.
    """
    labels = list(labels)
    probs = [float(p) for p in probs]
    if len(labels) != len(probs):
        raise ValueError("labels and probs must have equal length")
    if allow_zero:
        kept = [(lab, p) for lab, p in zip(labels, probs) if p != 0.0]
        if not kept:
            raise NonPositiveMass("all symbols have zero mass")
        labels = [lab for lab, _ in kept]
        probs = [p for _, p in kept]
    if not labels:
        raise ValueError("a distribution needs at least one symbol")
    if len(set(labels)) != len(labels):
        dupes = sorted({str(lab) for lab in labels if labels.count(lab) > 1})
        raise DuplicateLabel(f"duplicate labels: {', '.join(dupes)}")
    for lab, p in zip(labels, probs):
        if not p > 0.0:
            raise NonPositiveMass(f"symbol {lab!r} has non-positive mass {p}")
    total = fsum(probs)
    if abs(total - 1.0) > RENORM_TOL:
        raise MassSumError(f"probabilities sum to {total!r}, not 1")
    if total != 1.0:
        probs = [p / total for p in probs]
    return Distribution(tuple(labels), tuple(probs))


@dataclass(frozen=True)
class Query:
    """A question mapping symbols into disjoint answer cells.

    ``cells[j]`` is the set of symbol indices that produce answer ``j``.
    """

    id: int
    cells: tuple[frozenset[int], ...]


def canonical_query(
    qid: int, cells: Iterable[Iterable[int]], n_symbols: int, d: int
) -> Query:
    """Canonicalize raw cells: drop empties and append the complement cell.

    Raises for overlapping cells, out-of-range indices, and queries that
    would need more than ``d`` cells once the complement is appended.
    """
    canon: list[frozenset[int]] = []
    seen: set[int] = set()
    for cell in cells:
        cs = frozenset(int(i) for i in cell)
        for i in cs:
            if not 0 <= i < n_symbols:
                raise OutOfRangeIndex(f"symbol index {i} outside 0..{n_symbols - 1}")
        if cs & seen:
            raise OverlappingCells(f"query {qid} has overlapping cells")
        if not cs:
            continue
        seen |= cs
        canon.append(cs)
    rest = frozenset(range(n_symbols)) - seen
    if rest:
        canon.append(rest)
    if not canon:
        raise ValueError(f"query {qid} has no nonempty cells")
    if len(canon) > d:
        raise TooManyCells(f"query {qid} needs {len(canon)} cells, arity is {d}")
    return Query(int(qid), tuple(canon))


@dataclass(frozen=True)
class QuerySet:
    """The admissible question pool for one problem instance.

    When ``unconstrained`` is true every D-ary partition of any candidate
    set is admissible and ``queries`` is ignored.
    """

    d: int
    n_symbols: int
    queries: tuple[Query, ...] = ()
    unconstrained: bool = False


def make_query_set(
    d: int,
    n_symbols: int,
    cells_list: Sequence[Iterable[Iterable[int]]] | None = None,
    *,
    unconstrained: bool = False,
) -> QuerySet:
    """Canonicalize raw queries into a QuerySet with dense ids from 0."""
    if d < 2:
        raise ValueError("arity d must be at least 2")
    if n_symbols < 1:
        raise ValueError("the symbol universe must be nonempty")
    queries = tuple(
        canonical_query(i, cells, n_symbols, d)
        for i, cells in enumerate(cells_list or ())
    )
    return QuerySet(int(d), int(n_symbols), queries, bool(unconstrained))


def query_set_from_json(data: Mapping, n_symbols: int) -> QuerySet:
    entries = sorted(data.get("queries", ()), key=lambda e: e["id"])
    ids = [int(e["id"]) for e in entries]
    if ids != list(range(len(ids))):
        raise ValueError("query ids must be unique and dense from 0")
    return make_query_set(
        int(data["d"]),
        n_symbols,
        [e["cells"] for e in entries],
        unconstrained=bool(data.get("unconstrained", False)),
    )


def query_set_to_json(qset: QuerySet) -> dict:
    return {
        "d": qset.d,
        "unconstrained": qset.unconstrained,
        "queries": [
            {"id": q.id, "cells": [sorted(c) for c in q.cells]} for q in qset.queries
        ],
    }


@dataclass(frozen=True)
class PartitionView:
    """Disjoint cells of one candidate set with conditional masses.

    Masses are normalized over the candidate set, so they sum to 1; empty
    cells never appear. ``answer_indices`` maps each cell back to the
    answer index of the originating query, when there is one.
    """

    cells: tuple[frozenset[int], ...]
    masses: tuple[float, ...]
    source_query: int | None = None
    answer_indices: tuple[int, ...] | None = None
    method: str | None = None


@dataclass(frozen=True)
class Leaf:
    symbol: int


@dataclass(frozen=True)
class Internal:
    query: Query
    children: dict[int, "Node"]


Node = Union[Leaf, Internal]


@dataclass(frozen=True)
class DecisionTree:
    """Identification strategy: internal nodes ask queries, leaves name symbols.

    ``queries`` is the table the node query ids refer to; for a tree built
    from a constrained QuerySet it is that set's queries, otherwise the
    virtual queries synthesized during construction.
    """

    root: Node
    n_symbols: int
    arity: int
    queries: tuple[Query, ...]


def tree_depths(tree: DecisionTree) -> list[int]:
    """Per-symbol leaf depth. Raises InvalidTree on duplicate or missing leaves."""
    depths = [-1] * tree.n_symbols
    stack: list[tuple[Node, int]] = [(tree.root, 0)]
    while stack:
        node, depth = stack.pop()
        if isinstance(node, Leaf):
            if not 0 <= node.symbol < tree.n_symbols:
                raise InvalidTree(f"leaf symbol {node.symbol} out of range")
            if depths[node.symbol] >= 0:
                raise InvalidTree(f"symbol {node.symbol} appears at two leaves")
            depths[node.symbol] = depth
        else:
            for child in node.children.values():
                stack.append((child, depth + 1))
    missing = [i for i, d in enumerate(depths) if d < 0]
    if missing:
        raise InvalidTree(f"symbols {missing} have no leaf")
    return depths


def _node_to_json(node: Node) -> dict:
    if isinstance(node, Leaf):
        return {"leaf": node.symbol}
    return {
        "query": node.query.id,
        "children": {str(a): _node_to_json(c) for a, c in sorted(node.children.items())},
    }


def tree_to_json(tree: DecisionTree) -> dict:
    """Nested export: ``{"query": id, "children": {...}}`` or ``{"leaf": index}``."""
    return _node_to_json(tree.root)


def tree_from_json(
    data: Mapping, queries: Sequence[Query], n_symbols: int, arity: int
) -> DecisionTree:
    """Rebuild a tree from its nested export plus the query table it references."""
    by_id = {q.id: q for q in queries}

    def parse(obj: Mapping) -> Node:
        if "leaf" in obj:
            return Leaf(int(obj["leaf"]))
        qid = int(obj["query"])
        if qid not in by_id:
            raise InvalidTree(f"tree references unknown query id {qid}")
        children = {int(a): parse(c) for a, c in obj["children"].items()}
        return Internal(by_id[qid], children)

    return DecisionTree(parse(data), n_symbols, arity, tuple(queries))


def tree_to_dot(tree: DecisionTree, dist: Distribution | None = None) -> str:
    """Render the tree as DOT graph text with deterministic node ids."""

    def cell_label(cell: frozenset[int]) -> str:
        if dist is not None:
            items = [str(dist.labels[i]) for i in sorted(cell)]
        else:
            items = [str(i) for i in sorted(cell)]
        text = ",".join(items)
        return text if len(text) <= 24 else text[:21] + "..."

    lines = ["digraph decision_tree {"]
    counter = [0]

    def emit(node: Node) -> int:
        my_id = counter[0]
        counter[0] += 1
        if isinstance(node, Leaf):
            label = str(dist.labels[node.symbol]) if dist is not None else str(node.symbol)
            lines.append(f'  n{my_id} [shape=box, label="{label}"];')
            return my_id
        lines.append(f'  n{my_id} [label="q{node.query.id}"];')
        for answer, child in sorted(node.children.items()):
            child_id = emit(child)
            lines.append(
                f'  n{my_id} -> n{child_id} [label="{answer}: {cell_label(node.query.cells[answer])}"];'
            )
        return my_id

    emit(tree.root)
    lines.append("}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class TreeVerdict:
    ok: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def tree_validate(
    tree: DecisionTree, dist: Distribution, qset: QuerySet | None = None
) -> TreeVerdict:
    """Check all structural invariants; returns the first violation found.

    Verdict-returning rather than raising: every path yields a TreeVerdict.
    """
    if dist.n != tree.n_symbols:
        return TreeVerdict(False, "distribution and tree disagree on symbol count")
    if qset is not None and qset.d != tree.arity:
        return TreeVerdict(False, f"tree arity {tree.arity} != query set arity {qset.d}")
    seen_symbols: set[int] = set()
    visited: set[int] = set()

    def walk(node: Node, cand: frozenset[int]) -> str | None:
        if id(node) in visited:
            return "tree structure contains a cycle"
        visited.add(id(node))
        if isinstance(node, Leaf):
            if node.symbol not in cand:
                return f"leaf symbol {node.symbol} not in its candidate set"
            if node.symbol in seen_symbols:
                return f"symbol {node.symbol} appears at two leaves"
            seen_symbols.add(node.symbol)
            return None
        q = node.query
        if len(q.cells) > tree.arity:
            return f"query {q.id} has more cells than the tree arity"
        if qset is not None and not qset.unconstrained:
            if not (0 <= q.id < len(qset.queries)) or qset.queries[q.id].cells != q.cells:
                return f"internal node uses query {q.id} not in the query set"
        expected = {
            a: cell & cand for a, cell in enumerate(q.cells) if cell & cand
        }
        if set(node.children) != set(expected):
            return (
                f"children of query {q.id} do not match its nonempty induced cells"
            )
        for a, child in node.children.items():
            problem = walk(child, expected[a])
            if problem:
                return problem
        return None

    problem = walk(tree.root, frozenset(range(tree.n_symbols)))
    if problem:
        return TreeVerdict(False, problem)
    if seen_symbols != set(range(tree.n_symbols)):
        missing = sorted(set(range(tree.n_symbols)) - seen_symbols)
        return TreeVerdict(False, f"symbols {missing} have no leaf")
    return TreeVerdict(True)


def distinguishability_classes(qset: QuerySet) -> list[frozenset[int]]:
    """Equivalence classes of symbols no query separates.

    Identification is feasible iff every class is a singleton; an
    unconstrained set separates everything.
    """
    if qset.unconstrained:
        return [frozenset({i}) for i in range(qset.n_symbols)]
    classes: list[frozenset[int]] = [frozenset(range(qset.n_symbols))]
    for q in qset.queries:
        cell_of: dict[int, int] = {}
        for j, cell in enumerate(q.cells):
            for i in cell:
                cell_of[i] = j
        refined: list[frozenset[int]] = []
        for cls in classes:
            buckets: dict[int, list[int]] = {}
            for i in sorted(cls):
                buckets.setdefault(cell_of[i], []).append(i)
            refined.extend(frozenset(b) for _, b in sorted(buckets.items()))
        classes = refined
    return sorted(classes, key=min)


@dataclass(frozen=True)
class CodeReport:
    """Per-symbol code lengths (query counts) and the expected length.

    ``expected_length`` is the mass-weighted mean of the lengths and never
    falls below ``entropy_base_d``, the distribution entropy in base-D
    digits. Coders that assign explicit codewords attach them.
    """

    per_symbol_lengths: tuple[int, ...]
    expected_length: float
    entropy_base_d: float
    codewords: tuple[str, ...] | None = None
