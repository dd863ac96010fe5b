"""Minimal dense linear algebra: the Mat carrier, norms and the Jacobi SVD oracle."""

from mars_m.linalg.matrix import (
    Mat,
    as_mat,
    check_same_shape,
    fro_norm,
    inner,
    rms,
)
from mars_m.linalg.svd import SvdResult, jacobi_svd, nuclear_norm, spectral_norm

__all__ = [
    "Mat",
    "SvdResult",
    "as_mat",
    "check_same_shape",
    "fro_norm",
    "inner",
    "jacobi_svd",
    "nuclear_norm",
    "rms",
    "spectral_norm",
]
