"""
Restricted Plancherel measure
=============================

Tabulate the law on diagrams with at most d rows, check it against
permutation counts, and draw from it in two ways.
"""
from collections import Counter

from youngrmt.combinatorics import rsk_shape
from youngrmt.plancherel import (
    distribution_csv,
    exact_distribution,
    rejection_sample_permutation,
    sample_diagram,
    sample_permutation,
)
from youngrmt.streams import RandomStream

dist = exact_distribution(4, 2)
print(distribution_csv(dist))
print("permutations of 4 with no decreasing run of length 3:", dist.total)

# %%
# Diagram draws, permutation draws and rejection draws share one law.
dist = exact_distribution(6, 2)
rng = RandomStream(1)
direct = Counter(sample_diagram(dist, rng) for _ in range(20000))
via_perm = Counter(rsk_shape(sample_permutation(6, 2, rng)) for _ in range(20000))
rejected = Counter(rsk_shape(rejection_sample_permutation(6, 2, rng)) for _ in range(20000))
for shape, prob in dist.entries:
    print(shape, f"{float(prob):.4f}", direct[shape] / 20000, via_perm[shape] / 20000, rejected[shape] / 20000)
