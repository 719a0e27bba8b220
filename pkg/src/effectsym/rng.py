"""Deterministic counter-based random streams.

Every random quantity in the package is drawn from a :class:`Stream`, a
SplitMix64 generator evaluated in counter mode.  The k-th 64-bit output
(k = 1, 2, ...) depends only on the seed and k:

    out_k = mix64((seed + k * GAMMA) mod 2**64),   GAMMA = 0x9E3779B97F4A7C15

with the finalizer (all arithmetic mod 2**64)

    z ^= z >> 30;  z *= 0xBF58476D1CE4E5B9
    z ^= z >> 27;  z *= 0x94D049BB133111EB
    z ^= z >> 31

Because each output is a pure function of (seed, k), blocks of outputs
vectorize, streams can be split by reseeding a child with the parent's
next output, and any other language can reproduce the sequences bit for
bit.  Reference values for seed 0: the first three outputs are
0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F.

Derived values:

* ``uniform``: ``(out >> 11) * 2.0**-53`` in ``[0, 1)``.
* ``gaussian``: Box-Muller.  Each pair of outputs (u1 from the first,
  u2 from the second) yields two normals::

      u1 = ((out >> 11) + 1) * 2.0**-53        # (0, 1], log-safe
      u2 = (out >> 11) * 2.0**-53              # [0, 1)
      z0 = sqrt(-2 ln u1) * cos(2 pi u2)
      z1 = sqrt(-2 ln u1) * sin(2 pi u2)

  Requests for an odd count still consume a whole pair.
* ``integer(n)``: ``out % n``.  The modulo bias is below n / 2**64,
  irrelevant at the sample sizes used here.
"""

from __future__ import annotations

import numpy as np

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX_1 = 0xBF58476D1CE4E5B9
_MIX_2 = 0x94D049BB133111EB


def mix64(z: int) -> int:
    """SplitMix64 finalizer on a 64-bit integer."""
    z = ((z ^ (z >> 30)) * _MIX_1) & _MASK
    z = ((z ^ (z >> 27)) * _MIX_2) & _MASK
    return z ^ (z >> 31)


def _mix64_block(z: np.ndarray) -> np.ndarray:
    with np.errstate(over="ignore"):
        z = (z ^ (z >> np.uint64(30))) * np.uint64(_MIX_1)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(_MIX_2)
        return z ^ (z >> np.uint64(31))


class Stream:
    """Counter-based SplitMix64 stream.

    State is just (seed, counter); outputs are pure functions of both,
    so a stream can be shared only by advancing it explicitly.
    """

    def __init__(self, seed: int, counter: int = 0):
        self._seed = int(seed) & _MASK
        self._counter = int(counter)

    @property
    def seed(self) -> int:
        return self._seed

    @property
    def counter(self) -> int:
        return self._counter

    def next_u64(self) -> int:
        self._counter += 1
        return mix64((self._seed + self._counter * _GAMMA) & _MASK)

    def u64_block(self, n: int) -> np.ndarray:
        """Next ``n`` outputs as a uint64 array (advances the counter by n)."""
        ks = np.arange(self._counter + 1, self._counter + n + 1, dtype=np.uint64)
        self._counter += n
        with np.errstate(over="ignore"):
            states = np.uint64(self._seed) + ks * np.uint64(_GAMMA)
        return _mix64_block(states)

    def spawn(self) -> "Stream":
        """Child stream seeded with this stream's next output."""
        return Stream(self.next_u64())

    def uniform(self, n: int | None = None):
        """Uniform float64 in [0, 1); scalar if ``n`` is None, else shape (n,)."""
        if n is None:
            return (self.next_u64() >> 11) * 2.0 ** -53
        return (self.u64_block(n) >> np.uint64(11)).astype(np.float64) * 2.0 ** -53

    def gaussian(self, n: int) -> np.ndarray:
        """``n`` standard normals via Box-Muller (consumed in pairs)."""
        m = (n + 1) // 2
        raw = self.u64_block(2 * m)
        u1 = ((raw[0::2] >> np.uint64(11)).astype(np.float64) + 1.0) * 2.0 ** -53
        u2 = (raw[1::2] >> np.uint64(11)).astype(np.float64) * 2.0 ** -53
        radius = np.sqrt(-2.0 * np.log(u1))
        angle = 2.0 * np.pi * u2
        out = np.empty(2 * m)
        out[0::2] = radius * np.cos(angle)
        out[1::2] = radius * np.sin(angle)
        return out[:n]

    def integer(self, n: int) -> int:
        """Uniform integer in [0, n)."""
        if n <= 0:
            raise ValueError("integer() needs a positive range")
        return self.next_u64() % n

    def __repr__(self) -> str:
        return f"Stream(seed={self._seed:#018x}, counter={self._counter})"
