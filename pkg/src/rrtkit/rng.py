"""Deterministic random number generation for reproducible benchmarks.

All randomness flows through :class:`RngStream`, a thin wrapper over numpy's
PCG64 bit generator. PCG64 is a named, documented algorithm whose output is
identical across platforms and numpy releases, which is what makes frozen-seed
benchmark results byte-reproducible. Platform-default generators (e.g. bare
``random.random`` with unspecified seeding) are never used.

Per-trial seeds are derived, not enumerated: ``derive_seed`` hashes the
(base seed, planner token, trial index) triple with FNV-1a over the token
bytes and SplitMix64 finalization over the integers. Distinct triples get
statistically independent streams and each trial can be reproduced in
isolation from its CSV row.
"""

from __future__ import annotations

import numpy as np

__all__ = ["RngStream", "splitmix64", "fnv1a64", "derive_seed"]

_MASK64 = (1 << 64) - 1


def splitmix64(value: int) -> int:
    """One SplitMix64 scramble step; a 64-bit finalizer with good avalanche."""
    z = (value + 0x9E3779B97F4A7C15) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def fnv1a64(data: bytes) -> int:
    """64-bit FNV-1a hash of a byte string."""
    h = 0xCBF29CE484222325
    for byte in data:
        h = ((h ^ byte) * 0x100000001B3) & _MASK64
    return h


def derive_seed(base_seed: int, planner: str, trial: int) -> int:
    """Derive the 64-bit per-trial seed for (base_seed, planner token, trial)."""
    if trial < 0:
        raise ValueError(f"trial index must be non-negative, got {trial}")
    h = fnv1a64(planner.encode("utf-8"))
    h = splitmix64((base_seed & _MASK64) ^ h)
    h = splitmix64(h ^ (trial & _MASK64))
    return h


class RngStream:
    """A seeded uniform random stream over [0, 1), backed by PCG64."""

    __slots__ = ("seed", "_gen")

    def __init__(self, seed: int) -> None:
        self.seed = int(seed) & _MASK64
        self._gen = np.random.Generator(np.random.PCG64(self.seed))

    def __repr__(self) -> str:
        return f"RngStream(seed={self.seed})"

    def random(self) -> float:
        """Next uniform draw from [0, 1)."""
        return float(self._gen.random())

    def random_array(self, n: int) -> np.ndarray:
        """Next ``n`` uniform draws from [0, 1) as a float64 array."""
        return self._gen.random(n)

    def clone(self) -> "RngStream":
        """A fresh stream with the same seed, rewound to the start of the sequence."""
        return RngStream(self.seed)
