from fractions import Fraction

import numpy as np
import pytest

from migc.coders import (
    brute_force_optimal,
    build_with_coder,
    gbsc_build,
    huffman_dary,
    migc_build,
    prefix_tree_from_codewords,
    shannon_dary,
)
from migc.errors import (
    BudgetExceeded,
    InfeasibleQuerySet,
    TooLarge,
    UnsupportedQuerySet,
)
from migc.infogain import expected_length
from migc.model import (
    make_query_set,
    tree_validate,
    validate_distribution,
)
from migc.partition import SearchBudget

from util import (
    exhaustive_optimal_length,
    feasible_random_query_set,
    greedy_by_exhaustive_partition,
    min_tree_length_unconstrained,
    random_distribution,
    sample_random_valid_tree,
)


class TestMigcConstrained:
    def test_example1_root_and_length(self, example1_dist, example1_qset):
        tree = migc_build(example1_dist, example1_qset)
        assert tree.root.query.id == 0  # entropy tie with query 2, lowest id wins
        report = expected_length(tree, example1_dist)
        assert report.expected_length == pytest.approx(2.0, abs=1e-12)

    def test_example1_every_strategy_costs_two(self, example1_dist, example1_qset):
        # independent oracle: all valid trees for this pool cost exactly 2.0
        rng = np.random.default_rng(0)
        costs = {
            round(
                expected_length(
                    sample_random_valid_tree(rng, example1_dist, example1_qset),
                    example1_dist,
                ).expected_length,
                9,
            )
            for _ in range(50)
        }
        assert costs == {2.0}

    def test_single_symbol(self):
        dist = validate_distribution(["x"], [1.0])
        tree = migc_build(dist, make_query_set(2, 1))
        assert expected_length(tree, dist).expected_length == 0.0

    def test_infeasible_raises(self):
        dist = validate_distribution(list(range(3)), [0.2, 0.3, 0.5])
        qset = make_query_set(2, 3, [[[0, 1, 2]]])  # never splits anything
        with pytest.raises(InfeasibleQuerySet):
            migc_build(dist, qset)

    def test_determinism(self, example1_dist, example1_qset):
        assert migc_build(example1_dist, example1_qset) == migc_build(
            example1_dist, example1_qset
        )


class TestMigcUnconstrained:
    def test_example2_length(self, example2_dist, example2_qset):
        tree = migc_build(example2_dist, example2_qset)
        report = expected_length(tree, example2_dist)
        assert report.expected_length == pytest.approx(1.7, abs=1e-12)
        assert report.per_symbol_lengths == (2, 2, 1, 2, 2)

    def test_example2_matches_exhaustive_greedy(self, example2_dist):
        depths = greedy_by_exhaustive_partition(example2_dist, 3)
        tree = migc_build(example2_dist, make_query_set(3, 5, unconstrained=True))
        assert tuple(depths[i] for i in range(5)) == tuple(
            expected_length(tree, example2_dist).per_symbol_lengths
        )

    def test_matches_exhaustive_greedy_randomly(self):
        rng = np.random.default_rng(21)
        for _ in range(25):
            n = int(rng.integers(2, 8))
            d = int(rng.integers(2, 5))
            dist = random_distribution(rng, n)
            depths = greedy_by_exhaustive_partition(dist, d)
            tree = migc_build(dist, make_query_set(d, n, unconstrained=True))
            assert tuple(depths[i] for i in range(n)) == tuple(
                expected_length(tree, dist).per_symbol_lengths
            )

    def test_trees_validate(self, example2_dist, example2_qset):
        tree = migc_build(example2_dist, example2_qset)
        assert tree_validate(tree, example2_dist, example2_qset)

    def test_budget_exceeded_propagates(self):
        dist = validate_distribution(list(range(6)), [1 / 6] * 6)
        qset = make_query_set(2, 6, unconstrained=True)
        with pytest.raises(BudgetExceeded):
            migc_build(dist, qset, SearchBudget(exact_state_limit=4, mode="exact"))

    def test_gbsc_requires_arity_two(self, example2_dist, example2_qset):
        with pytest.raises(UnsupportedQuerySet):
            gbsc_build(example2_dist, example2_qset)


class TestHuffman:
    def test_example1(self, example1_dist):
        report, tree = huffman_dary(example1_dist, 2)
        assert report.per_symbol_lengths == (3, 1, 3, 2)
        assert report.expected_length == pytest.approx(1.9, abs=1e-12)
        assert tree_validate(tree, example1_dist)

    def test_example2_with_ternary_merge(self, example2_dist):
        report, tree = huffman_dary(example2_dist, 3)
        assert report.per_symbol_lengths == (2, 2, 1, 2, 1)
        assert report.expected_length == pytest.approx(1.45, abs=1e-12)
        assert tree_validate(tree, example2_dist)

    def test_uniform_n_equals_d(self):
        dist = validate_distribution(list(range(4)), [0.25] * 4)
        report, _ = huffman_dary(dist, 4)
        assert report.per_symbol_lengths == (1, 1, 1, 1)

    def test_single_symbol(self):
        dist = validate_distribution(["x"], [1.0])
        report, _ = huffman_dary(dist, 3)
        assert report.per_symbol_lengths == (0,)

    def test_dummy_padding_sizes(self):
        # n=2, d=3 needs one dummy so the single merge is full
        dist = validate_distribution(["a", "b"], [0.6, 0.4])
        report, tree = huffman_dary(dist, 3)
        assert report.per_symbol_lengths == (1, 1)
        assert tree_validate(tree, dist)

    def test_optimal_versus_exhaustive_tree_search(self):
        rng = np.random.default_rng(9)
        for _ in range(20):
            n = int(rng.integers(2, 6))
            d = int(rng.integers(2, 4))
            dist = random_distribution(rng, n)
            report, _ = huffman_dary(dist, d)
            best = min_tree_length_unconstrained(dist, d)
            assert report.expected_length == pytest.approx(best, abs=1e-9)


class TestShannon:
    def test_quarter_in_base3(self):
        dist = validate_distribution(["a", "b"], [0.25, 0.75])
        report = shannon_dary(dist, 3)
        assert report.per_symbol_lengths[0] == 2  # ceil(log_3 4)

    def test_dyadic_mass(self):
        dist = validate_distribution(["a", "b"], [0.5, 0.5])
        report = shannon_dary(dist, 2)
        assert report.per_symbol_lengths == (1, 1)

    def test_example2(self, example2_dist):
        report = shannon_dary(example2_dist, 3)
        assert report.per_symbol_lengths == (3, 2, 2, 2, 2)
        assert report.expected_length == pytest.approx(2.1, abs=1e-12)

    def test_kraft_holds(self):
        rng = np.random.default_rng(17)
        for _ in range(30):
            n = int(rng.integers(2, 12))
            d = int(rng.integers(2, 5))
            dist = random_distribution(rng, n)
            report = shannon_dary(dist, d)
            kraft = sum(Fraction(1, d**l) for l in report.per_symbol_lengths)
            assert kraft <= 1

    def test_codewords_prefix_free(self):
        rng = np.random.default_rng(23)
        for _ in range(20):
            n = int(rng.integers(2, 10))
            d = int(rng.integers(2, 4))
            dist = random_distribution(rng, n)
            report = shannon_dary(dist, d)
            words = report.codewords
            assert len(set(words)) == n
            for i in range(n):
                assert len(words[i]) == report.per_symbol_lengths[i]
                for j in range(n):
                    if i != j:
                        assert not words[j].startswith(words[i])

    def test_prefix_tree_depths_match_lengths(self, example2_dist):
        report = shannon_dary(example2_dist, 3)
        tree = prefix_tree_from_codewords(report.codewords, 5, 3)
        assert (
            expected_length(tree, example2_dist).per_symbol_lengths
            == report.per_symbol_lengths
        )
        assert tree_validate(tree, example2_dist)


class TestBruteForce:
    def test_example1_matches_migc(self, example1_dist, example1_qset):
        report, tree = brute_force_optimal(example1_dist, example1_qset)
        assert report.expected_length == pytest.approx(2.0, abs=1e-12)
        assert tree_validate(tree, example1_dist, example1_qset)

    def test_single_symbol(self):
        dist = validate_distribution(["x"], [1.0])
        report, _ = brute_force_optimal(dist, make_query_set(2, 1))
        assert report.expected_length == 0.0

    def test_matches_exhaustive_oracle(self):
        rng = np.random.default_rng(31)
        for _ in range(25):
            n = int(rng.integers(2, 7))
            d = int(rng.integers(2, 4))
            dist = random_distribution(rng, n)
            qset = feasible_random_query_set(rng, n, d, int(rng.integers(2, 6)))
            report, tree = brute_force_optimal(dist, qset)
            oracle = exhaustive_optimal_length(dist, qset)
            assert report.expected_length == pytest.approx(oracle, abs=1e-9)
            assert tree_validate(tree, dist, qset)

    def test_infeasible(self):
        dist = validate_distribution(list(range(3)), [0.2, 0.3, 0.5])
        qset = make_query_set(2, 3, [[[0, 1, 2]]])
        with pytest.raises(InfeasibleQuerySet):
            brute_force_optimal(dist, qset)

    def test_unconstrained_rejected(self, example2_dist, example2_qset):
        with pytest.raises(ValueError):
            brute_force_optimal(example2_dist, example2_qset)

    def test_too_large(self):
        n = 33
        probs = [1 / n] * n
        dist = validate_distribution(list(range(n)), probs)
        qset = make_query_set(2, n, [[[0]]])
        with pytest.raises(TooLarge):
            brute_force_optimal(dist, qset)


class TestOrderingProperties:
    def test_lemma2_per_symbol_bound(self):
        # greedy depth never exceeds ceil(log_d(1/p)) in exact mode
        rng = np.random.default_rng(41)
        budget = SearchBudget(mode="exact")
        for _ in range(60):
            n = int(rng.integers(2, 10))
            d = int(rng.integers(2, 5))
            dist = random_distribution(rng, n)
            qset = make_query_set(d, n, unconstrained=True)
            migc_rep = expected_length(migc_build(dist, qset, budget), dist)
            shannon_rep = shannon_dary(dist, d)
            for depth, bound in zip(
                migc_rep.per_symbol_lengths, shannon_rep.per_symbol_lengths
            ):
                assert depth <= bound

    def test_sandwich_huffman_migc_shannon(self):
        rng = np.random.default_rng(43)
        for _ in range(40):
            n = int(rng.integers(2, 11))
            d = int(rng.integers(2, 5))
            dist = random_distribution(rng, n)
            qset = make_query_set(d, n, unconstrained=True)
            h = huffman_dary(dist, d)[0].expected_length
            m = expected_length(migc_build(dist, qset), dist).expected_length
            s = shannon_dary(dist, d).expected_length
            assert h <= m + 1e-12 <= s + 1e-12
            assert m < expected_length(migc_build(dist, qset), dist).entropy_base_d + 1

    def test_oracle_dominance_over_random_trees(self):
        rng = np.random.default_rng(47)
        for _ in range(10):
            n = int(rng.integers(3, 8))
            d = int(rng.integers(2, 4))
            dist = random_distribution(rng, n)
            qset = feasible_random_query_set(rng, n, d, int(rng.integers(3, 7)))
            opt = brute_force_optimal(dist, qset)[0].expected_length
            migc_len = expected_length(migc_build(dist, qset), dist).expected_length
            assert opt <= migc_len + 1e-9
            for _ in range(10):
                tree = sample_random_valid_tree(rng, dist, qset)
                assert opt <= expected_length(tree, dist).expected_length + 1e-9


class TestCoderRegistry:
    def test_names(self, example1_dist, example1_qset):
        for name in ("migc", "gbsc", "bruteforce"):
            report, tree, virtual = build_with_coder(name, example1_dist, example1_qset)
            assert not virtual
            assert tree_validate(tree, example1_dist, example1_qset)

    def test_unconstrained_coders(self, example2_dist, example2_qset):
        for name in ("migc", "huffman", "shannon"):
            report, tree, virtual = build_with_coder(name, example2_dist, example2_qset)
            assert virtual
            assert tree_validate(tree, example2_dist, example2_qset)

    def test_huffman_requires_unconstrained(self, example1_dist, example1_qset):
        with pytest.raises(UnsupportedQuerySet):
            build_with_coder("huffman", example1_dist, example1_qset)

    def test_unknown_name(self, example1_dist, example1_qset):
        with pytest.raises(ValueError):
            build_with_coder("fano", example1_dist, example1_qset)
