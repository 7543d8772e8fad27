"""
Diagrams meet matrices
======================

Rescaled rows of restricted Plancherel diagrams against traceless GUE
eigenvalues. The distance shrinks slowly as n grows; the exact d=2 law
makes the finite-n gap visible without sampling noise.
"""
from youngrmt.experiments import compare, dhw_distance

for n in (100, 300, 1000):
    print(n, "exact d=2 sup distance:", round(dhw_distance(n), 4))

# %%
for n in (100, 1000):
    report = compare(n, 3, 5000, seed=0)
    print(n, {k: round(v, 3) for k, v in report["ks"].items()})
