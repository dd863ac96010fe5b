"""Problem lookup by config name."""

from __future__ import annotations

from typing import Any

from pydantic import TypeAdapter

from mars_m.problems.config import LowRankConfig, MlpConfig, ProblemConfig, QuadraticConfig
from mars_m.problems.lowrank import LowRankFactorization
from mars_m.problems.mlp import SyntheticMLP
from mars_m.problems.protocol import Problem
from mars_m.problems.quadratic import NoisyQuadratic

_PROBLEM_REGISTRY: dict[type, type] = {
    QuadraticConfig: NoisyQuadratic,
    LowRankConfig: LowRankFactorization,
    MlpConfig: SyntheticMLP,
}

_CONFIG_ADAPTER: TypeAdapter[ProblemConfig] = TypeAdapter(ProblemConfig)


def build_problem(config: ProblemConfig | dict[str, Any]) -> Problem:
    """Build a problem from its config model or a raw ``{name: ..., ...}`` mapping."""
    if isinstance(config, dict):
        config = _CONFIG_ADAPTER.validate_python(config)
    problem_cls = _PROBLEM_REGISTRY[type(config)]
    return problem_cls(config)


def problem_names() -> tuple[str, ...]:
    return tuple(cls.name for cls in _PROBLEM_REGISTRY.values())
