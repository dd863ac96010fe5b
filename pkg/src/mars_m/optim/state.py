"""Per-parameter optimizer buffers.

States are mutable and owned by exactly one trajectory; the step functions
advance them in place and return the new parameter value.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from mars_m.linalg import Mat


@dataclass
class MuonState:
    """Momentum buffer for Muon and the clipped-EMA baseline."""

    M: Mat
    t: int = 1

    @classmethod
    def zeros(cls, shape: tuple[int, int]) -> "MuonState":
        return cls(M=np.zeros(shape))


@dataclass
class MoonlightState:
    """Moonlight keeps its first momentum sum in ``U`` (the Nesterov feed is recomputed)."""

    U: Mat
    t: int = 1

    @classmethod
    def zeros(cls, shape: tuple[int, int]) -> "MoonlightState":
        return cls(U=np.zeros(shape))


@dataclass
class MarsMState:
    """MARS-M buffers.

    Exact mode keeps ``prev_X`` (where the caller must evaluate the previous
    iterate's gradient under the current sample); approximate mode keeps
    ``prev_grad`` (the previous step's own gradient).
    """

    M: Mat
    mode: Literal["exact", "approximate"]
    prev_grad: Mat | None = None
    prev_X: Mat | None = None
    t: int = 1

    @classmethod
    def initial(
        cls, x0: Mat, mode: Literal["exact", "approximate"] = "approximate"
    ) -> "MarsMState":
        # X_1 <- X_0, so the first exact correction vanishes.
        return cls(
            M=np.zeros_like(x0),
            mode=mode,
            prev_X=np.array(x0, copy=True) if mode == "exact" else None,
        )


@dataclass
class AdamWState:
    m: Mat
    v: Mat
    t: int = 1

    @classmethod
    def zeros(cls, shape: tuple[int, int]) -> "AdamWState":
        return cls(m=np.zeros(shape), v=np.zeros(shape))


@dataclass
class RecurrenceState:
    """Bare momentum recurrences used to check the algebraic reformulations.

    ``prev_grad`` starts at zero, so the first gradient difference is g_1 - 0.
    """

    M: Mat
    U: Mat
    prev_grad: Mat
    t: int = 1

    @classmethod
    def zeros(cls, shape: tuple[int, int]) -> "RecurrenceState":
        return cls(M=np.zeros(shape), U=np.zeros(shape), prev_grad=np.zeros(shape))
