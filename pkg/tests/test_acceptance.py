"""Acceptance suite: one test per release criterion, each printing a
PASS/FAIL line (run with ``pytest tests/test_acceptance.py -v -s``).

Two DNA sub-criteria are expected to fail and are left red on purpose:
the 2.16 reference value for the mean optimum equals the entropy floor
of the sampled ensemble, which no interval-constrained strategy can
reach (the true constrained optimum sits near 2.77). See the README's
acceptance notes for the analysis; nothing here is loosened to force
green.
"""

import io
import time

import numpy as np
import pytest

from migc.coders import brute_force_optimal, migc_build, shannon_dary
from migc.infogain import (
    entropy_of_masses,
    expected_length,
    induced_partition,
    information_gain,
)
from migc.model import make_query_set, tree_validate, validate_distribution
from migc.partition import SearchBudget
from migc.rng import rng_for
from migc.scenarios.battleship import BattleshipConfig, battleship_bench
from migc.scenarios.coding import BenchConfig, bench_fig5, write_fig5_csv, write_gaps_csv
from migc.scenarios.dna import dna_bench, write_dna_csv

from util import feasible_random_query_set, random_distribution

SEED = 20240901


def report(name: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    print(f"ACCEPTANCE {name}: {status}" + (f" ({detail})" if detail else ""))


def random_cover_query(rng: np.random.Generator, n: int, d: int):
    while True:
        assign = rng.integers(0, d, size=n)
        groups: dict[int, list[int]] = {}
        for i, c in enumerate(assign):
            groups.setdefault(int(c), []).append(i)
        if groups:
            break
    qset = make_query_set(d, n, [[groups[c] for c in sorted(groups)]])
    return qset.queries[0]


def test_lemma1_gain_equals_answer_entropy():
    """1000 random triples: the two computation routes agree to 1e-9."""
    start = time.perf_counter()
    rng = rng_for(SEED, 1)
    worst = 0.0
    for _ in range(1000):
        n = int(rng.integers(2, 13))
        d = int(rng.integers(2, 5))
        dist = random_distribution(rng, n)
        query = random_cover_query(rng, n, d)
        size = int(rng.integers(1, n + 1))
        cand = frozenset(int(i) for i in rng.choice(n, size=size, replace=False))
        gain = information_gain(query, cand, dist, base=d)
        answer_entropy = entropy_of_masses(
            induced_partition(query, cand, dist).masses, d
        )
        worst = max(worst, abs(gain - answer_entropy))
    elapsed = time.perf_counter() - start
    ok = worst <= 1e-9 and elapsed < 5.0
    report("lemma1-gain-equals-answer-entropy", ok, f"worst |diff| {worst:.2e}, {elapsed:.1f}s")
    assert worst <= 1e-9
    assert elapsed < 5.0


def test_lemma2_and_theorem1_per_symbol_bounds():
    """500 dists per (N, D), exact mode: depth_i <= ceil(log_D 1/p_i),
    L_migc <= L_shannon, and L_migc < H_D + 1 on every trial."""
    start = time.perf_counter()
    budget = SearchBudget(mode="exact")
    violations = 0
    trials = 0
    for d in (2, 3, 4):
        for n in range(2, 13):
            qset = make_query_set(d, n, unconstrained=True)
            for s in range(500):
                dist = random_distribution(rng_for(SEED, 2, d, n, s), n)
                migc_rep = expected_length(migc_build(dist, qset, budget), dist)
                shannon_rep = shannon_dary(dist, d)
                trials += 1
                per_symbol_ok = all(
                    depth <= bound
                    for depth, bound in zip(
                        migc_rep.per_symbol_lengths, shannon_rep.per_symbol_lengths
                    )
                )
                expected_ok = (
                    migc_rep.expected_length <= shannon_rep.expected_length + 1e-12
                )
                corollary_ok = (
                    migc_rep.expected_length < migc_rep.entropy_base_d + 1.0
                )
                if not (per_symbol_ok and expected_ok and corollary_ok):
                    violations += 1
    elapsed = time.perf_counter() - start
    ok = violations == 0 and elapsed < 120.0
    report(
        "lemma2-theorem1-corollary1",
        ok,
        f"{trials} trials, {violations} violations, {elapsed:.1f}s",
    )
    assert violations == 0
    assert elapsed < 120.0


_FIG5_ELAPSED: list[float] = []


@pytest.fixture(scope="module")
def fig5_full():
    start = time.perf_counter()
    result = bench_fig5(BenchConfig(3, 12, samples_per_n=1000, d=3, seed=SEED))
    _FIG5_ELAPSED.append(time.perf_counter() - start)
    return result


def test_fig5a_mean_length_ordering(fig5_full):
    """Huffman <= MIGC <= Shannon per N; strictly between for N > 5."""
    start = time.perf_counter()
    ordering_ok = all(
        mean_h <= mean_m + 1e-12 and mean_m <= mean_s + 1e-12
        for _, mean_h, mean_m, mean_s in fig5_full.rows
    )
    strict_ok = all(
        mean_h < mean_m < mean_s
        for n, mean_h, mean_m, mean_s in fig5_full.rows
        if n > 5
    )
    elapsed = time.perf_counter() - start
    ok = ordering_ok and strict_ok
    report(
        "fig5a-mean-ordering",
        ok,
        "rows: " + "; ".join(
            f"N={n}: {h:.3f}<={m:.3f}<={s:.3f}" for n, h, m, s in fig5_full.rows[:3]
        ) + " ...",
    )
    assert ordering_ok
    assert strict_ok


def test_fig5a_runtime(fig5_full):
    elapsed = _FIG5_ELAPSED[0]
    ok = elapsed < 300.0
    report("fig5a-runtime", ok, f"{elapsed:.1f}s for 10 x 1000 samples")
    assert elapsed < 300.0


def test_fig5b_per_symbol_gap_nonnegative():
    """N=10, D=3, 1000 samples: Shannon minus greedy depth >= 0 for all."""
    result = bench_fig5(BenchConfig(10, 10, samples_per_n=1000, d=3, seed=SEED))
    gaps = [gap_sm for _, _, gap_sm, _ in result.gap_rows]
    negative = sum(1 for g in gaps if g < 0)
    ok = negative == 0
    report(
        "fig5b-gap-nonnegative",
        ok,
        f"{len(gaps)} symbol gaps, {negative} negative, max {max(gaps)}",
    )
    assert negative == 0


_DNA_ELAPSED: list[float] = []


@pytest.fixture(scope="module")
def dna_full():
    start = time.perf_counter()
    result = dna_bench(6, samples=1000, seed=SEED)
    _DNA_ELAPSED.append(time.perf_counter() - start)
    return result


def test_dna_runtime_and_gap_quantile(dna_full):
    """N=6, 1000 samples in under ten minutes: greedy-vs-optimal gap
    <= 0.20 at the 95th percentile."""
    elapsed = _DNA_ELAPSED[0]
    p95 = dna_full.gap_quantile(0.95)
    ok = p95 <= 0.20 and elapsed < 600.0
    report("dna-gap-95th-percentile", ok, f"p95 gap {p95:.4f} (cap 0.20), {elapsed:.0f}s")
    assert elapsed < 600.0
    assert p95 <= 0.20, (
        f"95th-percentile greedy-vs-optimal gap is {p95:.4f}; the 0.20 cap "
        "is not reachable for interval-constrained probing (see README)"
    )


def test_dna_mean_optimum_reference(dna_full):
    """N=6, 1000 samples: mean exact optimum within 2.16 +/- 0.10."""
    mean_brute = dna_full.mean_bruteforce
    floor = np.mean(
        [
            entropy_of_masses(
                validate_distribution(
                    list(range(30)),
                    # recover each sampled distribution for the floor statistic
                    _dna_sample_probs(s),
                ).probs,
                4,
            )
            for s in range(200)
        ]
    )
    ok = abs(mean_brute - 2.16) <= 0.10
    report(
        "dna-mean-optimum",
        ok,
        f"mean optimum {mean_brute:.4f} vs reference 2.16+/-0.10; "
        f"ensemble entropy floor {floor:.4f}",
    )
    assert ok, (
        f"mean interval-constrained optimum is {mean_brute:.4f}; the 2.16 "
        "reference equals the ensemble's base-4 entropy floor "
        f"(measured {floor:.4f}), which interval probes cannot attain "
        "(see README acceptance notes)"
    )


def _dna_sample_probs(s: int):
    from migc.scenarios.coding import sample_simplex
    from migc.scenarios.dna import STREAM_DNA

    return list(sample_simplex(30, rng_for(SEED, STREAM_DNA, 6, s)).probs)


def test_dna_binary_baseline_ordering():
    """mean greedy detections <= mean binary-baseline detections, N in 4..6."""
    means = {}
    for n, samples in ((4, 200), (5, 200), (6, 200)):
        result = dna_bench(n, samples=samples, seed=SEED)
        means[n] = (result.mean_migc, result.mean_gbsc)
    ok = all(m <= g for m, g in means.values())
    report(
        "dna-binary-baseline",
        ok,
        "; ".join(f"N={n}: {m:.3f}<={g:.3f}" for n, (m, g) in means.items()),
    )
    assert ok


def test_battleship_full_scale():
    """identify rule, 3^12 sampled layouts, 50 games: mean tries >= 12;
    traces non-increasing and ending at 0; each shot's expected
    information (the answer entropy of the chosen cell) <= 1 trit."""
    start = time.perf_counter()
    config = BattleshipConfig(layout_count=3**12, stop_rule="identify", seed=SEED)
    result = battleship_bench(config, games=50)
    elapsed = time.perf_counter() - start

    mean_tries = result.mean_tries
    monotone = all(
        all(a >= b - 1e-12 for a, b in zip(trace, trace[1:]))
        for trace in result.traces
    )
    end_zero = all(trace[-1] == 0.0 for trace in result.traces)
    gain_bounded = all(
        all(g <= 1.0 + 1e-9 for g in gains) for gains in result.gain_traces
    )
    max_realized_drop = max(
        max(a - b for a, b in zip(trace, trace[1:])) for trace in result.traces
    )
    ok = mean_tries >= 12.0 and monotone and end_zero and gain_bounded and elapsed < 900
    report(
        "battleship-identify",
        ok,
        f"mean tries {mean_tries:.2f}, max expected gain/shot "
        f"{max(max(g) for g in result.gain_traces):.4f} trit, "
        f"max realized drop {max_realized_drop:.2f} trit, {elapsed:.0f}s",
    )
    assert mean_tries >= 12.0
    assert monotone
    assert end_zero
    assert gain_bounded
    assert elapsed < 900


def test_oracle_equivalence_on_random_instances():
    """200 random constrained instances, N <= 8: the exact optimum never
    exceeds the greedy length and both trees validate; both equal 2.0 on
    the four-symbol membership example."""
    rng = rng_for(SEED, 7)
    failures = 0
    for _ in range(200):
        n = int(rng.integers(2, 9))
        d = int(rng.integers(2, 5))
        dist = random_distribution(rng, n)
        qset = feasible_random_query_set(rng, n, d, int(rng.integers(2, 2 * n + 1)))
        brute_rep, brute_tree = brute_force_optimal(dist, qset)
        migc_tree = migc_build(dist, qset)
        migc_rep = expected_length(migc_tree, dist)
        if brute_rep.expected_length > migc_rep.expected_length + 1e-9:
            failures += 1
        if not tree_validate(brute_tree, dist, qset) or not tree_validate(
            migc_tree, dist, qset
        ):
            failures += 1

    dist1 = validate_distribution([1, 2, 3, 4], [0.1, 0.4, 0.2, 0.3])
    qset1 = make_query_set(2, 4, [[[0, 1]], [[1, 2]], [[2, 3]]])
    brute_len = brute_force_optimal(dist1, qset1)[0].expected_length
    migc_len = expected_length(migc_build(dist1, qset1), dist1).expected_length
    exact_two = brute_len == 2.0 and migc_len == 2.0
    ok = failures == 0 and exact_two
    report(
        "oracle-equivalence",
        ok,
        f"200 instances, {failures} violations; four-symbol example: "
        f"optimum {brute_len}, greedy {migc_len}",
    )
    assert failures == 0
    assert exact_two


def test_benchmarks_byte_identical_reruns():
    """Same seed, same bytes for every benchmark CSV (reduced scale;
    determinism does not depend on sample counts)."""
    outputs = []
    for _ in range(2):
        buffers = {name: io.StringIO() for name in ("fig5", "gaps", "dna", "ship", "traces")}
        fig5 = bench_fig5(BenchConfig(3, 6, samples_per_n=25, d=3, seed=SEED))
        write_fig5_csv(fig5, buffers["fig5"])
        write_gaps_csv(fig5, buffers["gaps"])
        dna = dna_bench(4, samples=20, seed=SEED)
        write_dna_csv(dna, buffers["dna"])
        config = BattleshipConfig(
            rows=4, cols=4, fleets=((2,), (2,)), layout_count=100, seed=SEED
        )
        ship = battleship_bench(config, games=4)
        from migc.scenarios.battleship import write_battleship_csv, write_traces_csv

        write_battleship_csv(ship, buffers["ship"])
        write_traces_csv(ship, buffers["traces"])
        outputs.append({k: b.getvalue() for k, b in buffers.items()})
    ok = outputs[0] == outputs[1]
    report("benchmark-determinism", ok, "fig5/gaps/dna/battleship/traces byte-identical")
    assert outputs[0] == outputs[1]
