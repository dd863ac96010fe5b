"""Polar-factor approximation (Newton-Schulz) and the exact SVD oracle."""

from mars_m.polar.newton_schulz import exact_polar, newton_schulz, orthogonalize
from mars_m.polar.scheme import QUINTIC_COEFFS, NsScheme, NsVariant

__all__ = [
    "NsScheme",
    "NsVariant",
    "QUINTIC_COEFFS",
    "exact_polar",
    "newton_schulz",
    "orthogonalize",
]
