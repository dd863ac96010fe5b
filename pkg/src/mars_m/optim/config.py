"""Optimizer hyperparameters.

Every config is a frozen pydantic model carrying a ``name`` discriminator so a
run file can select one with ``optimizer: {name: mars_m, ...}``. Defaults:
beta = 0.95, gamma = 0.025, clip threshold 1.0 and an update scale of 0.2.
"""

from __future__ import annotations

from typing import Annotated, Literal, Union

from pydantic import BaseModel, ConfigDict, Field

from mars_m.optim.schedules import ConstantSchedule, Schedule
from mars_m.polar.scheme import NsScheme


class _OptimizerBase(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    lr: Schedule = Field(default_factory=lambda: ConstantSchedule(lr=0.01))


class MuonConfig(_OptimizerBase):
    name: Literal["muon"] = "muon"
    beta: float = Field(default=0.95, ge=0.0, lt=1.0)
    ns: NsScheme = Field(default_factory=NsScheme)
    # feed (1 - beta) g instead of g into both momentum sums
    dampened: bool = False
    # orthogonalize beta M + g instead of M
    nesterov_feed: bool = True


class MoonlightConfig(_OptimizerBase):
    name: Literal["moonlight"] = "moonlight"
    beta: float = Field(default=0.95, ge=0.0, lt=1.0)
    weight_decay: float = Field(default=0.1, ge=0.0)
    ns: NsScheme = Field(default_factory=NsScheme)
    rms_scale: float = Field(default=0.2, gt=0.0)
    momentum: Literal["nesterov", "clipped_ema"] = "nesterov"
    # only read by the clipped-EMA momentum
    clip_threshold: float | None = Field(default=1.0, gt=0.0)


class MarsMConfig(_OptimizerBase):
    name: Literal["mars_m"] = "mars_m"
    beta: float = Field(default=0.95, ge=0.0, lt=1.0)
    gamma: float = Field(default=0.025, ge=0.0)
    gamma_schedule: Schedule | None = None
    weight_decay: float = Field(default=0.1, ge=0.0)
    ns: NsScheme = Field(default_factory=NsScheme)
    rms_scale: float = Field(default=0.2, gt=0.0)
    scale_update: bool = True
    clip_threshold: float | None = Field(default=1.0, gt=0.0)
    mode: Literal["exact", "approximate"] = "approximate"
    orthogonalizer: Literal["newton_schulz", "svd"] = "newton_schulz"


class AdamWConfig(_OptimizerBase):
    name: Literal["adamw"] = "adamw"
    beta1: float = Field(default=0.9, ge=0.0, lt=1.0)
    beta2: float = Field(default=0.999, ge=0.0, lt=1.0)
    eps: float = Field(default=1e-8, gt=0.0)
    weight_decay: float = Field(default=0.1, ge=0.0)


MatrixOptimizerConfig = Union[MuonConfig, MoonlightConfig, MarsMConfig]

OptimizerConfig = Annotated[
    Union[MuonConfig, MoonlightConfig, MarsMConfig, AdamWConfig],
    Field(discriminator="name"),
]
