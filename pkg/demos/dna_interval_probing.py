"""Locating two genes with contiguous-interval probes.

Two genes sit on distinct exons of a 6-exon chain. A probe covers an
interval of exons and reports which genes it caught (first, second,
both, neither). We compare the greedy max-gain strategy against the
exact optimum and against a binary baseline that only learns whether the
probe caught anything at all.
"""

import numpy as np

from migc.scenarios import dna_bench, dna_instance

inst = dna_instance(6)
print(f"{inst.n_exons} exons -> {len(inst.targets)} ordered placements,"
      f" {len(inst.qset.queries)} interval probes, 4-way answers\n")

result = dna_bench(6, samples=150, seed=42)
gaps = result.gaps

print(f"mean expected probes over {result.samples} random target distributions")
print(f"  exact optimum : {result.mean_bruteforce:.4f}")
print(f"  greedy        : {result.mean_migc:.4f}")
print(f"  binary probe  : {result.mean_gbsc:.4f}   (identifies the unordered pair)")
print(f"\ngreedy vs optimum gap: mean {gaps.mean():.4f},"
      f" 95th percentile {np.quantile(gaps, 0.95):.4f}, max {gaps.max():.4f}")
print("the greedy strategy is optimal on", int((gaps < 1e-9).sum()), "of",
      result.samples, "samples")
