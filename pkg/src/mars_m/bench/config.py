"""Run configuration files.

A run file is YAML with the sections ``run``, ``problem``, ``optimizer`` and
an optional ``vector_optimizer``::

    run: {name: theory, steps: 10000, seed: 0}
    problem: {name: quadratic, m: 8, n: 8, sigma: 1.0}
    optimizer:
      name: mars_m
      mode: exact
      lr: {kind: theory, s: 4}

Unknown keys anywhere are rejected with a :class:`ConfigError` naming the
dotted key.
"""

from __future__ import annotations

from pathlib import Path
from typing import Any

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from mars_m.exceptions import ConfigError
from mars_m.optim.config import AdamWConfig, MarsMConfig, OptimizerConfig
from mars_m.optim.schedules import CosineWarmupSchedule, Schedule
from mars_m.problems.config import ProblemConfig
from mars_m.problems.registry import problem_names


class RunSection(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    name: str = "run"
    steps: int = Field(ge=1)
    seed: int = Field(default=0, ge=0)
    # record every ``stride`` steps; the last step is always recorded
    stride: int = Field(default=1, ge=1)
    out: Path = Path("runs")


class RunConfig(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    run: RunSection
    problem: ProblemConfig
    optimizer: OptimizerConfig
    vector_optimizer: AdamWConfig | None = None

    @property
    def name(self) -> str:
        return self.run.name

    def with_run(self, **changes: Any) -> "RunConfig":
        """Copy with fields of the ``run`` section replaced; ``None`` values are ignored."""
        changes = {k: v for k, v in changes.items() if v is not None}
        if not changes:
            return self
        return self.model_copy(update={"run": self.run.model_copy(update=changes)})

    def csv_path(self) -> Path:
        return self.run.out / f"{self.run.name}_seed{self.run.seed}.csv"

    def summary_path(self) -> Path:
        return self.run.out / f"{self.run.name}_seed{self.run.seed}.summary.txt"


_TAG_KEYS = ("name", "kind")


def _dotted_key(data: Any, loc: tuple[int | str, ...], error_type: str) -> str:
    """Map a pydantic error location onto the user's key path, dropping union tags."""
    parts: list[str] = []
    node = data
    for item in loc:
        if isinstance(node, dict) and item not in node:
            if any(node.get(tag) == item for tag in _TAG_KEYS):
                continue
        parts.append(str(item))
        node = node.get(item) if isinstance(node, dict) else None
    if error_type in ("union_tag_invalid", "union_tag_not_found"):
        tag = "kind" if isinstance(node, dict) and "kind" in node else "name"
        parts.append(tag)
    return ".".join(parts)


def parse_run_config(data: Any) -> RunConfig:
    """Validate a raw mapping.

    Raises:
        ConfigError: with ``key`` set to the first offending dotted key.
    """
    if not isinstance(data, dict):
        raise ConfigError("run config must be a mapping")
    try:
        config = RunConfig.model_validate(data)
    except ValidationError as exc:
        first = exc.errors()[0]
        key = _dotted_key(data, tuple(first["loc"]), first["type"])
        if first["type"] == "extra_forbidden":
            reason = "unknown key"
        elif key == "problem.name":
            reason = f"unknown problem, expected one of {', '.join(problem_names())}"
        else:
            reason = first["msg"]
        raise ConfigError(f"{key}: {reason}", key=key) from exc

    for key, sched in schedules(config):
        if isinstance(sched, CosineWarmupSchedule) and sched.total_steps < config.run.steps:
            raise ConfigError(
                f"{key}.total_steps={sched.total_steps} is shorter than run.steps={config.run.steps}",
                key=f"{key}.total_steps",
            )
    return config


def schedules(config: RunConfig) -> list[tuple[str, Schedule]]:
    """Every schedule a run evaluates, keyed by its dotted path."""
    found: list[tuple[str, Schedule]] = [("optimizer.lr", config.optimizer.lr)]
    if isinstance(config.optimizer, MarsMConfig) and config.optimizer.gamma_schedule is not None:
        found.append(("optimizer.gamma_schedule", config.optimizer.gamma_schedule))
    if config.vector_optimizer is not None:
        found.append(("vector_optimizer.lr", config.vector_optimizer.lr))
    return found


def load_run_config(path: str | Path) -> RunConfig:
    """Read and validate a YAML run file."""
    path = Path(path)
    try:
        data = yaml.safe_load(path.read_text())
    except FileNotFoundError as exc:
        raise ConfigError(f"config file not found: {path}") from exc
    except yaml.YAMLError as exc:
        raise ConfigError(f"{path}: invalid YAML: {exc}") from exc
    return parse_run_config(data)
