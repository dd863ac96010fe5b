"""Learning-rate schedules and the step-size lemma check."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Annotated, Literal, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from mars_m.exceptions import ScheduleRangeError


class _ScheduleBase(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")


class ConstantSchedule(_ScheduleBase):
    kind: Literal["constant"] = "constant"
    lr: float = Field(ge=0.0)


class CosineWarmupSchedule(_ScheduleBase):
    """Linear ramp to ``max_lr`` over ``warmup_steps``, cosine decay to ``min_lr`` at ``total_steps``."""

    kind: Literal["cosine_warmup"] = "cosine_warmup"
    max_lr: float = Field(ge=0.0)
    min_lr: float = Field(default=0.0, ge=0.0)
    warmup_steps: int = Field(default=0, ge=0)
    total_steps: int = Field(ge=1)

    @model_validator(mode="after")
    def _warmup_before_total(self) -> "CosineWarmupSchedule":
        if self.warmup_steps >= self.total_steps:
            raise ValueError("warmup_steps must be smaller than total_steps")
        return self


class TheorySchedule(_ScheduleBase):
    """eta_t = (s + t)^(-2/3) paired with beta_{t+1} = 1 - 2 eta_t."""

    kind: Literal["theory"] = "theory"
    s: int = Field(default=2, ge=2)


class MultiStepSchedule(_ScheduleBase):
    """Piecewise-constant decay by ``factor`` after each milestone step."""

    kind: Literal["multistep"] = "multistep"
    lr: float = Field(ge=0.0)
    milestones: tuple[int, ...] = ()
    factor: float = Field(default=0.1, gt=0.0, le=1.0)


Schedule = Annotated[
    Union[ConstantSchedule, CosineWarmupSchedule, TheorySchedule, MultiStepSchedule],
    Field(discriminator="kind"),
]


def schedule_eval(sched: Schedule, t: int) -> tuple[float, float | None]:
    """Evaluate a schedule at step ``t`` (1-based).

    Returns:
        ``(eta_t, beta_next)``; ``beta_next`` is only populated by the theory
        schedule, as ``1 - 2 eta_t``.

    Raises:
        ScheduleRangeError: for t < 1, or t beyond ``total_steps`` of a cosine schedule.
    """
    if t < 1:
        raise ScheduleRangeError(f"step index must be >= 1, got {t}", t=t)
    match sched:
        case ConstantSchedule(lr=lr):
            return lr, None
        case CosineWarmupSchedule():
            return _cosine_warmup(sched, t), None
        case TheorySchedule(s=s):
            eta = (s + t) ** (-2.0 / 3.0)
            return eta, 1.0 - 2.0 * eta
        case MultiStepSchedule(lr=lr, milestones=milestones, factor=factor):
            passed = sum(1 for m in milestones if m < t)
            return lr * factor**passed, None
    raise TypeError(f"unknown schedule {sched!r}")


def _cosine_warmup(sched: CosineWarmupSchedule, t: int) -> float:
    if t > sched.total_steps:
        raise ScheduleRangeError(
            f"step {t} is past total_steps={sched.total_steps}", t=t
        )
    if t <= sched.warmup_steps:
        return sched.max_lr * t / sched.warmup_steps
    progress = (t - sched.warmup_steps) / (sched.total_steps - sched.warmup_steps)
    return sched.min_lr + 0.5 * (sched.max_lr - sched.min_lr) * (
        1.0 + math.cos(math.pi * progress)
    )


def momentum_at(beta: float, sched: Schedule, t: int) -> float:
    """Momentum for step t: the theory pairing 1 - 2 eta_{t-1} from t = 2, else ``beta``."""
    if t >= 2 and isinstance(sched, TheorySchedule):
        _, beta_next = schedule_eval(sched, t - 1)
        assert beta_next is not None
        return beta_next
    return beta


@dataclass(frozen=True, slots=True)
class LemmaCheck:
    """Outcome of checking 1/eta_t - 1/eta_{t-1} <= sqrt(eta_t) over 1..T."""

    holds: bool
    min_slack: float
    worst_t: int


def verify_schedule_lemma(s: int, T: int) -> LemmaCheck:
    """Check the step-size inequality for eta_t = (s + t)^(-2/3), 1 <= t <= T."""
    if s < 1:
        raise ValueError("s must be >= 1")
    if T < 1:
        raise ValueError("T must be >= 1")
    t = np.arange(1, T + 1, dtype=np.float64)
    inv_now = (s + t) ** (2.0 / 3.0)
    inv_prev = (s + t - 1.0) ** (2.0 / 3.0)
    slack = (s + t) ** (-1.0 / 3.0) - (inv_now - inv_prev)
    worst = int(np.argmin(slack))
    return LemmaCheck(
        holds=bool(np.all(slack >= 0.0)),
        min_slack=float(slack[worst]),
        worst_t=worst + 1,
    )
