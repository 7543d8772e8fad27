"""Reproducible random streams.

Every Monte Carlo draw in the package takes an explicit :class:`RandomStream`.
A stream is identified by ``(master_seed, stream_index)``; draw ``k`` of an
experiment uses stream index ``k``, so results do not depend on how the work
is split across processes.
"""

import math

import numpy as np

MASK64 = (1 << 64) - 1


def splitmix64(x: int) -> int:
    """One round of the splitmix64 finalizer (a bijection on 64-bit words)."""
    z = (x + 0x9E3779B97F4A7C15) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def stream_seed(master_seed: int, stream_index: int) -> int:
    """64-bit seed for stream ``stream_index`` of ``master_seed``.

    ``splitmix64(splitmix64(master) ^ index)``: injective in the index for a
    fixed master seed.
    """
    return splitmix64(splitmix64(master_seed & MASK64) ^ (stream_index & MASK64))


class RandomStream:
    """A deterministic source of uniforms and Gaussians.

    The generator behind the stream is PCG64 seeded with
    :func:`stream_seed`. Gaussian variates are produced by Box-Muller from the
    stream's uniforms so that the sequence is fixed by the uniforms alone.
    """

    def __init__(self, master_seed: int, stream_index: int = 0):
        self.master_seed = int(master_seed)
        self.stream_index = int(stream_index)
        self._gen = np.random.Generator(
            np.random.PCG64(stream_seed(self.master_seed, self.stream_index))
        )

    def __repr__(self):
        return f"RandomStream(master_seed={self.master_seed}, stream_index={self.stream_index})"

    def uniform(self) -> float:
        """One uniform variate on [0, 1)."""
        return float(self._gen.random())

    def uniforms(self, size: int) -> np.ndarray:
        return self._gen.random(size)

    def normals(self, size: int) -> np.ndarray:
        """``size`` independent standard normal variates (Box-Muller)."""
        pairs = (size + 1) // 2
        u = self._gen.random((pairs, 2))
        radius = np.sqrt(-2.0 * np.log1p(-u[:, 0]))
        angle = 2.0 * math.pi * u[:, 1]
        z = np.column_stack((radius * np.cos(angle), radius * np.sin(angle)))
        return z.ravel()[:size]

    def permutation(self, n: int) -> tuple[int, ...]:
        """Uniform permutation of 1..n by Fisher-Yates shuffling."""
        values = list(range(1, n + 1))
        for i in range(n - 1, 0, -1):
            j = int(self._gen.integers(0, i + 1))
            values[i], values[j] = values[j], values[i]
        return tuple(values)
