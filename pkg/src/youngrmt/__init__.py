"""Young diagrams of permutations without long decreasing subsequences, and GUE0.

Exact restricted Plancherel combinatorics, traceless GUE sampling, a numerical
check of the Poisson local limit behind the connection, and the statistics used
to compare the two sides.
"""

__version__ = "0.1.0"

from .combinatorics import (
    det_count,
    hook_count,
    inverse_rsk,
    lds,
    lis,
    partitions,
    path_count_oracle,
    rsk,
    sample_syt,
)
from .exceptions import ResourceLimitError, UnsupportedDimensionError
from .plancherel import (
    ExactDistribution,
    RescaledRows,
    exact_distribution,
    rejection_sample_permutation,
    rescale_rows,
    sample_diagram,
    sample_permutation,
    total_count,
)
from .rmt import (
    eigenvalues,
    gue0_density,
    largest_eig_cdf_d2,
    normalization_constant,
    sample_gue,
    sample_gue0,
)
from .streams import RandomStream
