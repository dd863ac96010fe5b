"""Shared test fixtures for mars-m."""

from __future__ import annotations

from pathlib import Path
from typing import Any, Callable

import numpy as np
import pytest

from mars_m.bench.config import RunConfig, parse_run_config
from mars_m.problems import MlpConfig, NoisyQuadratic, QuadraticConfig, SyntheticMLP


@pytest.fixture
def rng() -> np.random.Generator:
    """A seeded generator; every test gets the same stream."""
    return np.random.default_rng(20240611)


@pytest.fixture
def small_mlp() -> SyntheticMLP:
    return SyntheticMLP(
        MlpConfig(input_dim=8, hidden=16, classes=3, dataset_size=256, batch=32)
    )


@pytest.fixture
def quadratic() -> NoisyQuadratic:
    return NoisyQuadratic(QuadraticConfig(m=6, n=4, sigma=0.5, condition=5.0))


@pytest.fixture
def run_config(tmp_path: Path) -> Callable[..., RunConfig]:
    """Factory for a small quadratic run writing under ``tmp_path``.

    Keyword arguments replace whole sections, e.g. ``optimizer={...}``.
    """

    def make(**sections: Any) -> RunConfig:
        data: dict[str, Any] = {
            "run": {"name": "test", "steps": 20, "seed": 0, "out": str(tmp_path)},
            "problem": {"name": "quadratic", "m": 6, "n": 4, "sigma": 0.5},
            "optimizer": {"name": "mars_m", "lr": {"kind": "constant", "lr": 0.02}},
        }
        data.update(sections)
        return parse_run_config(data)

    return make


def polar_test_matrix(rng: np.random.Generator, m: int, n: int, cond: float) -> np.ndarray:
    """m x n (m >= n) matrix with singular values geometrically spaced from 1 to 1/cond."""
    left, _ = np.linalg.qr(rng.standard_normal((m, n)))
    right, _ = np.linalg.qr(rng.standard_normal((n, n)))
    return (left * np.geomspace(1.0, 1.0 / cond, n)) @ right.T
