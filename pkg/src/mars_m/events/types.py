"""Event types for the run lifecycle - Pydantic models."""

from __future__ import annotations

from typing import Union

from pydantic import BaseModel, ConfigDict


class BenchEvent(BaseModel):
    """Base class for all bench events.

    Events are frozen Pydantic models so they can be serialized to JSON for
    streaming or logging.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")


class RunStartEvent(BenchEvent):
    """Emitted when a trainer run begins."""

    run_name: str
    seed: int
    problem: str
    optimizer: str
    steps: int


class StepEvent(BenchEvent):
    """Emitted for every recorded step."""

    run_name: str
    seed: int
    step: int
    loss: float
    grad_norm_fro: float
    eta: float


class RunEndEvent(BenchEvent):
    """Emitted when a run completes."""

    run_name: str
    seed: int
    steps: int
    final_loss: float
    best_loss: float
    total_duration_ms: int


class CheckEvent(BenchEvent):
    """Emitted after each verification check."""

    name: str
    passed: bool
    measured: float
    threshold: float
    detail: str = ""


Event = Union[RunStartEvent, StepEvent, RunEndEvent, CheckEvent]
