"""mars-m - Muon, Moonlight and MARS-M matrix optimizers with a seeded benchmark harness."""

from mars_m._version import __version__
from mars_m.types import (
    CheckResult,
    ComparisonRow,
    RunRecord,
    RunResult,
    VerifyReport,
)
from mars_m.linalg import (
    Mat,
    SvdResult,
    as_mat,
    fro_norm,
    jacobi_svd,
    nuclear_norm,
    spectral_norm,
)
from mars_m.polar import NsScheme, exact_polar, newton_schulz, orthogonalize
from mars_m.optim import (
    AdamWConfig,
    AdamWState,
    ConstantSchedule,
    CosineWarmupSchedule,
    MarsMConfig,
    MarsMState,
    MoonlightConfig,
    MoonlightState,
    MultiStepSchedule,
    MuonConfig,
    MuonState,
    ParamSetOptimizer,
    RecurrenceState,
    Schedule,
    TheorySchedule,
    adamw_step,
    adjusted_recurrence_step,
    approximate_momentum_step,
    clip_fro,
    mars_m_step,
    moonlight_reformulated_step,
    moonlight_step,
    muon_step,
    schedule_eval,
    verify_schedule_lemma,
)
from mars_m.problems import (
    LowRankFactorization,
    NoisyQuadratic,
    ParamSet,
    Problem,
    ProblemMeta,
    Sample,
    SyntheticMLP,
    build_problem,
)
from mars_m.events import (
    BenchEvent,
    CheckEvent,
    CompositeObserver,
    ConsoleObserver,
    Event,
    JsonlObserver,
    NullObserver,
    Observer,
    RecordingObserver,
    RunEndEvent,
    RunStartEvent,
    StepEvent,
)
from mars_m.bench import (
    RunConfig,
    Trainer,
    VerifySettings,
    compare,
    fit_slope,
    load_run_config,
    verify,
)
from mars_m.exceptions import (
    ConfigError,
    ConvergenceError,
    DegenerateInputError,
    MarsMError,
    ModeError,
    NonFiniteError,
    ProblemError,
    RunError,
    ScheduleRangeError,
    ShapeError,
    SlopeFitError,
)

__all__ = [
    "__version__",
    # Types
    "CheckResult",
    "ComparisonRow",
    "RunRecord",
    "RunResult",
    "VerifyReport",
    # Linear algebra
    "Mat",
    "SvdResult",
    "as_mat",
    "fro_norm",
    "jacobi_svd",
    "nuclear_norm",
    "spectral_norm",
    # Polar
    "NsScheme",
    "exact_polar",
    "newton_schulz",
    "orthogonalize",
    # Optimizers
    "AdamWConfig",
    "AdamWState",
    "ConstantSchedule",
    "CosineWarmupSchedule",
    "MarsMConfig",
    "MarsMState",
    "MoonlightConfig",
    "MoonlightState",
    "MultiStepSchedule",
    "MuonConfig",
    "MuonState",
    "ParamSetOptimizer",
    "RecurrenceState",
    "Schedule",
    "TheorySchedule",
    "adamw_step",
    "adjusted_recurrence_step",
    "approximate_momentum_step",
    "clip_fro",
    "mars_m_step",
    "moonlight_reformulated_step",
    "moonlight_step",
    "muon_step",
    "schedule_eval",
    "verify_schedule_lemma",
    # Problems
    "LowRankFactorization",
    "NoisyQuadratic",
    "ParamSet",
    "Problem",
    "ProblemMeta",
    "Sample",
    "SyntheticMLP",
    "build_problem",
    # Events
    "BenchEvent",
    "CheckEvent",
    "CompositeObserver",
    "ConsoleObserver",
    "Event",
    "JsonlObserver",
    "NullObserver",
    "Observer",
    "RecordingObserver",
    "RunEndEvent",
    "RunStartEvent",
    "StepEvent",
    # Bench
    "RunConfig",
    "Trainer",
    "VerifySettings",
    "compare",
    "fit_slope",
    "load_run_config",
    "verify",
    # Exceptions
    "ConfigError",
    "ConvergenceError",
    "DegenerateInputError",
    "MarsMError",
    "ModeError",
    "NonFiniteError",
    "ProblemError",
    "RunError",
    "ScheduleRangeError",
    "ShapeError",
    "SlopeFitError",
]
