"""
Traceless GUE spectra
=====================

Sample traceless Hermitian Gaussian matrices, diagonalize them with the
batched Jacobi solver and compare the top eigenvalue for d=2 with the chi
law of three degrees of freedom.
"""
import numpy as np

from youngrmt.rmt import chi3_cdf, gue0_density, normalization_constant, sample_gue0_spectra
from youngrmt.stats import ks_one_sample

spectra = sample_gue0_spectra(3, 11, range(5000))
print("first spectra:\n", spectra[:3])
print("max |sum|:", np.abs(spectra.sum(axis=1)).max())

# %%
x1 = sample_gue0_spectra(2, 12, range(20000))[:, 0]
print("KS of sqrt(2) x1 against chi_3:", ks_one_sample(np.sqrt(2) * x1, chi3_cdf))

# %%
for d in (2, 3, 4):
    print(d, normalization_constant(d))
print("density at (1, -1):", gue0_density([1.0, -1.0]) / normalization_constant(2))
