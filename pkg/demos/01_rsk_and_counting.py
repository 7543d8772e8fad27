"""
RSK and three ways to count tableaux
====================================

Insert a permutation, read off its increasing and decreasing subsequence
lengths from the shape, invert the map, then count standard tableaux of a
shape with the hook formula, a determinant and a brute-force path walk.
"""
from youngrmt import combinatorics as cb

p = (3, 6, 1, 7, 2, 5, 4)
P, Q = cb.rsk(p)
print("P =", P)
print("Q =", Q)
print("shape", cb.shape_of(P), "lis", cb.lis(p), "lds", cb.lds(p))
assert cb.inverse_rsk(P, Q) == p

# %%
# All three counters agree on every small shape.
for shape in cb.partitions(6, 6):
    h = cb.hook_count(shape)
    print(f"{cb.format_diagram(shape):>12}  hook={h:3d}  det={cb.det_count(shape, len(shape)):3d}"
          f"  paths={cb.path_count_oracle(shape, len(shape)):3d}")

# %%
# The determinant stays exact far past 64 bits.
print(cb.hook_count((20, 18, 15, 10, 5)))
