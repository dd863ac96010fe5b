"""Frobenius-norm gradient clipping."""

from __future__ import annotations

from mars_m.linalg import Mat, fro_norm


def clip_fro(c: Mat, threshold: float) -> Mat:
    """Rescale ``c`` onto the Frobenius ball of radius ``threshold`` if it lies outside.

    Inputs with norm <= threshold (the zero matrix included) are returned unchanged.
    """
    if threshold <= 0.0:
        raise ValueError("clip threshold must be positive")
    norm = fro_norm(c)
    if norm > threshold:
        return c * (threshold / norm)
    return c
