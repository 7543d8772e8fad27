"""
Poisson local limit
===================

Rescaled Poisson probabilities and their finite differences approach the
Gaussian density and its derivatives as the mean grows.
"""
import numpy as np

from youngrmt.limitlemma import DiscretizationParams, difference_profile, gaussian_derivative, lemma_report

ys = np.linspace(-3, 3, 7)
for c in (100.0, 10000.0):
    p = DiscretizationParams(c)
    print(f"c={c:g}")
    for alpha in (0, 1, 2):
        print("  ", alpha, np.round(difference_profile(alpha, ys, p), 4), np.round(gaussian_derivative(alpha, ys), 4))

# %%
grid = np.round(np.arange(-3.0, 3.0 + 1e-9, 0.01), 12)
for row in lemma_report([1e2, 1e3, 1e4], [0, 1, 2, 3], grid):
    print(row)
