"""Dense matrix carrier and norms."""

from __future__ import annotations

from typing import Any, TypeAlias

import numpy as np
import numpy.typing as npt

from mars_m.exceptions import NonFiniteError, ShapeError

Mat: TypeAlias = npt.NDArray[np.float64]
"""Row-major 2-D float64 array with at least one row and one column, all finite."""


def as_mat(value: Any, name: str = "matrix") -> Mat:
    """Validate and convert ``value`` to a :data:`Mat`.

    Raises:
        ShapeError: if the value is not 2-D or has an empty dimension.
        NonFiniteError: if any entry is NaN or infinite.
    """
    arr = np.asarray(value, dtype=np.float64)
    if arr.ndim != 2:
        raise ShapeError(f"{name} must be 2-D, got {arr.ndim}-D", actual=arr.shape)
    if arr.shape[0] < 1 or arr.shape[1] < 1:
        raise ShapeError(f"{name} has an empty dimension", actual=arr.shape)
    if not np.all(np.isfinite(arr)):
        raise NonFiniteError(f"{name} contains non-finite entries")
    return np.ascontiguousarray(arr)


def check_same_shape(a: Mat, b: Mat, what: str = "operands") -> None:
    if a.shape != b.shape:
        raise ShapeError(
            f"{what} differ in shape: {a.shape} vs {b.shape}",
            expected=a.shape,
            actual=b.shape,
        )


def fro_norm(a: Mat) -> float:
    """Frobenius norm sqrt(sum_ij a_ij^2)."""
    return float(np.linalg.norm(a))


def inner(a: Mat, b: Mat) -> float:
    """Trace inner product <a, b> = sum_ij a_ij b_ij."""
    check_same_shape(a, b)
    return float(np.vdot(a, b))


def rms(a: Mat) -> float:
    """Root-mean-square of the entries."""
    return fro_norm(a) / float(np.sqrt(a.size))
