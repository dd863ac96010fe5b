"""Counter-based sample streams.

All randomness for step t is derived from ``(seed, t, name, purpose)`` through
a Philox generator, so any gradient can be re-evaluated at any point under
the same sample without replaying a stream.
"""

from __future__ import annotations

import zlib
from dataclasses import dataclass

import numpy as np


def _key(text: str) -> int:
    return zlib.crc32(text.encode("utf-8"))


def keyed_generator(seed: int, *keys: int | str) -> np.random.Generator:
    """Philox generator keyed on ``seed`` and any mix of integer or string keys."""
    words = [seed] + [_key(k) if isinstance(k, str) else k for k in keys]
    if any(w < 0 for w in words):
        raise ValueError("seed and integer keys must be non-negative")
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(words)))


@dataclass(frozen=True, slots=True)
class Sample:
    """The random draw xi_t of step ``t`` of the trajectory seeded by ``seed``."""

    seed: int
    t: int

    def generator(self, purpose: str, name: str = "") -> np.random.Generator:
        """Fresh generator for one use of this sample; same arguments, same stream."""
        return keyed_generator(self.seed, self.t, name, purpose)
