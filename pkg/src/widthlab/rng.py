"""Counter-based stream of uniform directions.

Sample ``i`` of the stream for a given seed is a pure function of
``(seed, i)``. The raw words come from the Philox4x64-10 bijection as
exposed by :class:`numpy.random.Philox` with ``key=seed``: word ``m`` of
``Philox(key=seed).random_raw()`` is produced from counter block ``m // 4``,
so any block of the stream can be generated without generating what
precedes it. This layout is fixed:

* sample ``i`` consumes words ``2*i`` and ``2*i + 1``;
* a word ``w`` becomes a double in ``[0, 1)`` as ``(w >> 11) * 2**-53``;
* the first double gives ``theta = 2*pi*x``; in 3D the second gives
  ``z = 2*y - 1`` and the direction is
  ``(sqrt(1-z^2) cos theta, sqrt(1-z^2) sin theta, z)``, which is uniform on
  the sphere. In 2D the second word is drawn but unused.

Only raw Philox output is used (never ``Generator`` methods), which numpy
keeps stable across releases.
"""

from __future__ import annotations

import numpy as np

from .exceptions import ContractViolation
from .geometry import UnitDirection

__all__ = ["DirectionStream", "uniform_direction_stream", "uniform_doubles"]

_WORDS_PER_SAMPLE = 2
_SEED_MODULUS = 1 << 128


def _raw_words(seed: int, first_word: int, count: int) -> np.ndarray:
    block, skip = divmod(first_word, 4)
    bitgen = np.random.Philox(key=seed % _SEED_MODULUS, counter=block)
    return bitgen.random_raw(count + skip)[skip:]


def uniform_doubles(seed: int, first_word: int, count: int) -> np.ndarray:
    """Words ``first_word .. first_word+count-1`` of the stream as doubles in [0, 1)."""
    return (_raw_words(seed, first_word, count) >> np.uint64(11)) * (1.0 / (1 << 53))


class DirectionStream:
    """Uniform directions on S^1 or S^2 indexed by a non-negative integer."""

    def __init__(self, dimension: int, seed: int):
        if dimension not in (2, 3):
            raise ContractViolation(f"dimension must be 2 or 3, got {dimension}")
        self.dimension = int(dimension)
        self.seed = int(seed)

    def __repr__(self):
        return f"DirectionStream(dimension={self.dimension}, seed={self.seed})"

    def block(self, start: int, count: int) -> np.ndarray:
        """Directions ``start .. start+count-1`` as an ``(count, dimension)`` array."""
        if start < 0 or count < 0:
            raise ContractViolation("start and count must be non-negative")
        x = uniform_doubles(self.seed, _WORDS_PER_SAMPLE * start, _WORDS_PER_SAMPLE * count)
        x = x.reshape(count, _WORDS_PER_SAMPLE)
        theta = 2.0 * np.pi * x[:, 0]
        if self.dimension == 2:
            return np.column_stack([np.cos(theta), np.sin(theta)])
        z = 2.0 * x[:, 1] - 1.0
        r = np.sqrt(1.0 - z * z)
        return np.column_stack([r * np.cos(theta), r * np.sin(theta), z])

    def __getitem__(self, index: int) -> UnitDirection:
        index = int(index)
        if index < 0:
            raise IndexError("stream indices are non-negative")
        return UnitDirection(tuple(self.block(index, 1)[0]))

    def __iter__(self):
        chunk = 4096
        start = 0
        while True:
            for row in self.block(start, chunk):
                yield UnitDirection(tuple(row))
            start += chunk


def uniform_direction_stream(dimension: int, seed: int) -> DirectionStream:
    return DirectionStream(dimension, seed)
