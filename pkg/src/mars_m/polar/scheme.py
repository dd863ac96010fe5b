"""Newton-Schulz iteration settings."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field

NsVariant = Literal["cubic", "quintic"]

QUINTIC_COEFFS = (3.4445, -4.7750, 2.0315)


class NsScheme(BaseModel):
    """Polynomial, iteration count and pre-normalization epsilon.

    ``cubic`` iterates Y <- 1.5 Y - 0.5 Y (Y^T Y) and contracts singular values
    to exactly 1. ``quintic`` iterates Y <- a Y + b Y (Y^T Y) + c Y (Y^T Y)^2
    with the widely deployed (3.4445, -4.7750, 2.0315); it is faster but leaves
    singular values oscillating in roughly [0.68, 1.2].
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    variant: NsVariant = "quintic"
    steps: int = Field(default=5, ge=1)
    eps: float = Field(default=1e-7, gt=0.0)

    @classmethod
    def cubic(cls, steps: int = 30, eps: float = 1e-7) -> "NsScheme":
        return cls(variant="cubic", steps=steps, eps=eps)

    @classmethod
    def quintic(cls, steps: int = 5, eps: float = 1e-7) -> "NsScheme":
        return cls(variant="quintic", steps=steps, eps=eps)
