"""Route a named parameter set to the matrix optimizer and AdamW."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from mars_m.exceptions import ModeError, ProblemError
from mars_m.linalg import Mat
from mars_m.optim.adamw import adamw_step
from mars_m.optim.config import (
    AdamWConfig,
    MarsMConfig,
    MoonlightConfig,
    MuonConfig,
    OptimizerConfig,
)
from mars_m.optim.mars import mars_m_step
from mars_m.optim.moonlight import moonlight_step
from mars_m.optim.muon import muon_step
from mars_m.optim.schedules import Schedule, schedule_eval
from mars_m.optim.state import AdamWState, MarsMState, MoonlightState, MuonState

Params = dict[str, Mat]

MatrixState = MuonState | MoonlightState | MarsMState


def is_matrix_like(shape: tuple[int, ...]) -> bool:
    """Both dimensions >= 2; biases stored as 1 x n are vector-like."""
    return len(shape) == 2 and min(shape) >= 2


@dataclass(frozen=True, slots=True)
class StepReport:
    eta: float
    # RMS of the pre-lr direction of the parameters `config` governs, decay excluded
    update_rms: float


class ParamSetOptimizer:
    """Owns one state per parameter for a single trajectory.

    Matrix-like parameters follow ``config``; everything else follows
    ``vector_config``. Without a ``vector_config`` the vector AdamW reuses the
    matrix optimizer's schedule. An AdamW ``config`` governs every parameter.
    """

    def __init__(
        self,
        config: OptimizerConfig,
        params: Mapping[str, Mat],
        vector_config: AdamWConfig | None = None,
    ) -> None:
        self.config = config
        self.shares_schedule = vector_config is None
        if isinstance(config, AdamWConfig):
            vector_config = config
        elif vector_config is None:
            vector_config = AdamWConfig(lr=config.lr)
        self.vector_config = vector_config
        self._matrix_states: dict[str, MatrixState] = {}
        self._vector_states: dict[str, AdamWState] = {}
        self._prev_vectors: Params = {}
        self._t = 1

        for name, value in params.items():
            if isinstance(config, AdamWConfig) or not is_matrix_like(value.shape):
                self._vector_states[name] = AdamWState.zeros(value.shape)
            else:
                self._matrix_states[name] = self._new_matrix_state(value)
        if self.needs_reference_gradient:
            self._prev_vectors = {
                name: params[name].copy() for name in self._vector_states
            }

    def _new_matrix_state(self, value: Mat) -> MatrixState:
        match self.config:
            case MarsMConfig(mode=mode):
                return MarsMState.initial(value, mode)
            case MoonlightConfig(momentum="clipped_ema"):
                return MuonState.zeros(value.shape)
            case MoonlightConfig():
                return MoonlightState.zeros(value.shape)
            case MuonConfig():
                return MuonState.zeros(value.shape)
        raise TypeError(f"not a matrix optimizer: {self.config!r}")

    @property
    def t(self) -> int:
        return self._t

    @property
    def matrix_names(self) -> tuple[str, ...]:
        return tuple(self._matrix_states)

    @property
    def vector_names(self) -> tuple[str, ...]:
        return tuple(self._vector_states)

    @property
    def schedule(self) -> Schedule:
        return self.config.lr

    @property
    def needs_reference_gradient(self) -> bool:
        """True when each step also needs the gradient at :meth:`reference_point`."""
        return isinstance(self.config, MarsMConfig) and self.config.mode == "exact"

    def reference_point(self, params: Mapping[str, Mat]) -> Params:
        """The previous iterate X_{t-1} (X_0 at the first step) for every parameter."""
        if not self.needs_reference_gradient:
            raise ModeError("only exact MARS-M evaluates a reference gradient")
        point: Params = {}
        for name in params:
            state = self._matrix_states.get(name)
            if state is not None:
                assert isinstance(state, MarsMState) and state.prev_X is not None
                point[name] = state.prev_X
            else:
                point[name] = self._prev_vectors[name]
        return point

    def step(
        self,
        params: Mapping[str, Mat],
        grads: Mapping[str, Mat],
        ref_grads: Mapping[str, Mat] | None = None,
    ) -> tuple[Params, StepReport]:
        """Update every parameter once and report the step size and update RMS."""
        missing = set(params) - set(grads)
        if missing:
            raise ProblemError(f"no gradient for {sorted(missing)}")
        if self.needs_reference_gradient and ref_grads is None:
            raise ModeError("exact mode needs reference gradients")

        eta, _ = schedule_eval(self.config.lr, self._t)
        new: Params = {}
        for name, x in params.items():
            g = grads[name]
            if name in self._vector_states:
                if self.needs_reference_gradient:
                    self._prev_vectors[name] = x.copy()
                new[name] = adamw_step(self._vector_states[name], x, g, self.vector_config)
                continue
            state = self._matrix_states[name]
            match self.config:
                case MarsMConfig():
                    assert isinstance(state, MarsMState)
                    g_ref = ref_grads[name] if ref_grads is not None else None
                    new[name] = mars_m_step(state, x, g, g_ref, self.config)
                case MoonlightConfig():
                    new[name] = moonlight_step(state, x, g, self.config)
                case MuonConfig():
                    assert isinstance(state, MuonState)
                    new[name] = muon_step(state, x, g, self.config)
        self._t += 1

        report = StepReport(eta=eta, update_rms=self._update_rms(params, new, eta))
        return new, report

    def _update_rms(self, old: Mapping[str, Mat], new: Mapping[str, Mat], eta: float) -> float:
        """RMS of (X_t - X_{t+1}) / eta - lambda X_t over the primary parameters.

        The primary parameters are the matrices, or every parameter when the
        optimizer is AdamW. Vector updates under a shared matrix optimizer do
        not enter.
        """
        names = self.matrix_names or self.vector_names
        if eta == 0.0 or not names:
            return 0.0
        if self.matrix_names:
            decay = getattr(self.config, "weight_decay", 0.0)
        else:
            decay = self.vector_config.weight_decay
        total = sum(
            float(np.sum(((old[k] - new[k]) / eta - decay * old[k]) ** 2)) for k in names
        )
        size = sum(old[k].size for k in names)
        return float(np.sqrt(total / size))
