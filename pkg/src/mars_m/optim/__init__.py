"""Muon, Moonlight, MARS-M and AdamW update rules with their schedules."""

from mars_m.optim.adamw import adamw_step
from mars_m.optim.clip import clip_fro
from mars_m.optim.config import (
    AdamWConfig,
    MarsMConfig,
    MatrixOptimizerConfig,
    MoonlightConfig,
    MuonConfig,
    OptimizerConfig,
)
from mars_m.optim.group import ParamSetOptimizer, Params, StepReport, is_matrix_like
from mars_m.optim.mars import corrected_gradient, gamma_at, mars_m_step
from mars_m.optim.moonlight import clipped_ema_step, moonlight_momentum, moonlight_step, scaled_update
from mars_m.optim.muon import muon_step
from mars_m.optim.reformulations import (
    adjusted_recurrence_step,
    approximate_momentum_step,
    moonlight_reformulated_step,
)
from mars_m.optim.schedules import (
    ConstantSchedule,
    CosineWarmupSchedule,
    LemmaCheck,
    MultiStepSchedule,
    Schedule,
    TheorySchedule,
    momentum_at,
    schedule_eval,
    verify_schedule_lemma,
)
from mars_m.optim.state import (
    AdamWState,
    MarsMState,
    MoonlightState,
    MuonState,
    RecurrenceState,
)

__all__ = [
    "AdamWConfig",
    "AdamWState",
    "ConstantSchedule",
    "CosineWarmupSchedule",
    "LemmaCheck",
    "MarsMConfig",
    "MarsMState",
    "MatrixOptimizerConfig",
    "MoonlightConfig",
    "MoonlightState",
    "MultiStepSchedule",
    "MuonConfig",
    "MuonState",
    "OptimizerConfig",
    "ParamSetOptimizer",
    "Params",
    "RecurrenceState",
    "Schedule",
    "StepReport",
    "TheorySchedule",
    "adamw_step",
    "adjusted_recurrence_step",
    "approximate_momentum_step",
    "clip_fro",
    "clipped_ema_step",
    "corrected_gradient",
    "gamma_at",
    "is_matrix_like",
    "mars_m_step",
    "momentum_at",
    "moonlight_momentum",
    "moonlight_reformulated_step",
    "moonlight_step",
    "muon_step",
    "schedule_eval",
    "scaled_update",
    "verify_schedule_lemma",
]
