"""Build identification trees for two small instances and inspect them.

The first instance is constrained: four symbols, and the only admissible
yes/no questions are membership in {1,2}, {2,3}, {3,4}. The second is a
five-symbol instance with three-way answers and no constraints at all.
"""

from migc import (
    brute_force_optimal,
    expected_length,
    huffman_dary,
    make_query_set,
    migc_build,
    shannon_dary,
    tree_to_dot,
    tree_validate,
    validate_distribution,
)

# --- constrained binary questioning ----------------------------------------

dist = validate_distribution([1, 2, 3, 4], [0.1, 0.4, 0.2, 0.3])
qset = make_query_set(2, 4, [[[0, 1]], [[1, 2]], [[2, 3]]])

tree = migc_build(dist, qset)
report = expected_length(tree, dist)
print("constrained instance")
print("  greedy tree root asks query", tree.root.query.id)
print("  per-symbol question counts:", report.per_symbol_lengths)
print("  expected questions:", report.expected_length)
print("  valid:", bool(tree_validate(tree, dist, qset)))

optimal, _ = brute_force_optimal(dist, qset)
print("  exact optimum:", optimal.expected_length, "(greedy matches it here)")

# Huffman ignores the constraint and therefore needs questions
# the pool does not actually contain:
huffman_report, _ = huffman_dary(dist, 2)
print("  unconstrained Huffman would need only", huffman_report.expected_length)

# --- unconstrained three-way questioning ------------------------------------

dist3 = validate_distribution([1, 2, 3, 4, 5], [0.1, 0.2, 0.3, 0.15, 0.25])
free = make_query_set(3, 5, unconstrained=True)
tree3 = migc_build(dist3, free)
report3 = expected_length(tree3, dist3)

print("\nunconstrained ternary instance")
print("  root partition:", [sorted(dist3.labels[i] for i in c) for c in tree3.root.query.cells])
print("  expected answers:", report3.expected_length, "trits")
print("  Huffman:", huffman_dary(dist3, 3)[0].expected_length)
print("  Shannon:", shannon_dary(dist3, 3).expected_length)

print("\nDOT rendering of the greedy tree:\n")
print(tree_to_dot(tree3, dist3))
