"""Empirical convergence-rate estimation on log-log axes."""

from __future__ import annotations

from pathlib import Path

import numpy as np

from mars_m.bench.records import read_column
from mars_m.exceptions import SlopeFitError

MIN_ROWS = 50


def fit_slope_arrays(
    steps: np.ndarray,
    values: np.ndarray,
    burn_in_fraction: float = 0.1,
    cesaro: bool = True,
) -> float:
    """Least-squares slope of log(y) against log(step) for steps >= 1.

    With ``cesaro`` the fitted y is the running average of ``values`` from
    step 1, which needs every step 1, 2, ..., n to be present; otherwise the
    values themselves. The first ``burn_in_fraction`` of rows is dropped
    after averaging.

    Raises:
        SlopeFitError: on non-finite or non-positive values, on gaps in the
            steps when ``cesaro`` is set, or fewer than ``MIN_ROWS`` rows
            left after burn-in.
    """
    if not 0.0 <= burn_in_fraction < 1.0:
        raise SlopeFitError("burn_in_fraction must lie in [0, 1)")
    steps = np.asarray(steps, dtype=np.float64)
    values = np.asarray(values, dtype=np.float64)
    keep = steps >= 1
    steps, values = steps[keep], values[keep]
    if not np.all(np.isfinite(values)):
        raise SlopeFitError("column contains non-finite or empty values")

    if cesaro:
        if not np.array_equal(steps, np.arange(1, steps.size + 1)):
            raise SlopeFitError(
                "running average needs every step from 1; fit a strided CSV with --raw "
                "or record it with run.stride: 1"
            )
        values = np.cumsum(values) / np.arange(1, values.size + 1)
    start = int(burn_in_fraction * values.size)
    steps, values = steps[start:], values[start:]
    if values.size < MIN_ROWS:
        raise SlopeFitError(f"need at least {MIN_ROWS} rows after burn-in, got {values.size}")
    if np.any(values <= 0.0):
        raise SlopeFitError("log-log fit needs positive values")

    slope, _ = np.polyfit(np.log(steps), np.log(values), 1)
    return float(slope)


def fit_slope(
    csv_path: str | Path,
    column: str = "true_grad_norm",
    burn_in_fraction: float = 0.1,
    cesaro: bool = True,
) -> float:
    """Fit the convergence-rate exponent of ``column`` in a metrics CSV."""
    steps, values = read_column(csv_path, column)
    return fit_slope_arrays(steps, values, burn_in_fraction, cesaro)


def running_average(values: np.ndarray) -> np.ndarray:
    values = np.asarray(values, dtype=np.float64)
    return np.cumsum(values) / np.arange(1, values.size + 1)
