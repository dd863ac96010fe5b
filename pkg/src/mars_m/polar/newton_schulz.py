"""Orthogonal polar factor: Newton-Schulz approximation and the exact SVD path."""

from __future__ import annotations

import numpy as np

from mars_m.exceptions import DegenerateInputError
from mars_m.linalg import Mat, as_mat, fro_norm, jacobi_svd
from mars_m.polar.scheme import QUINTIC_COEFFS, NsScheme


def newton_schulz(m: Mat, scheme: NsScheme | None = None) -> Mat:
    """Approximate U V^T of ``m`` by Newton-Schulz iteration.

    The input is divided by ``||m||_F + eps`` so every singular value starts in
    (0, 1]. Wide inputs are iterated on their transpose so the Gram product is
    always the smaller square. The zero matrix maps to itself.
    """
    scheme = scheme or NsScheme()
    m = as_mat(m, "momentum")
    norm = fro_norm(m)
    if norm == 0.0:
        return np.zeros_like(m)

    wide = m.shape[0] < m.shape[1]
    y = (m.T if wide else m) / (norm + scheme.eps)
    if scheme.variant == "cubic":
        for _ in range(scheme.steps):
            y = 1.5 * y - 0.5 * (y @ (y.T @ y))
    else:
        a, b, c = QUINTIC_COEFFS
        for _ in range(scheme.steps):
            gram = y.T @ y
            y = a * y + y @ (b * gram + c * (gram @ gram))
    return np.ascontiguousarray(y.T if wide else y)


def exact_polar(m: Mat) -> Mat:
    """U V^T from the reduced Jacobi SVD of ``m``.

    Directions with numerically zero singular values keep the basis vectors
    the SVD produced for them.

    Raises:
        DegenerateInputError: for the zero matrix.
    """
    m = as_mat(m, "momentum")
    if fro_norm(m) == 0.0:
        raise DegenerateInputError("polar factor of the zero matrix is undefined")
    svd = jacobi_svd(m)
    return svd.U @ svd.V.T


def orthogonalize(m: Mat, scheme: NsScheme, method: str = "newton_schulz") -> Mat:
    """Dispatch to Newton-Schulz or the exact polar factor; zero maps to zero."""
    if method == "svd":
        m = as_mat(m, "momentum")
        if fro_norm(m) == 0.0:
            return np.zeros_like(m)
        return exact_polar(m)
    return newton_schulz(m, scheme)
