"""MARS-M: variance-reduced gradient correction in front of Moonlight's update.

Each step forms the corrected gradient

    C_t = g_t + gamma_t * beta / (1 - beta) * (g_t - g_ref)

accumulates its clipped value into an exponential moving average and applies
the scaled orthogonalized momentum. ``g_ref`` depends on the mode:

* ``exact``: the caller evaluates the gradient at ``state.prev_X`` under the
  *current* sample and passes it in. Two gradient calls per step.
* ``approximate``: the gradient returned by the previous step is reused.

The optimizer never calls a gradient oracle itself.
"""

from __future__ import annotations

from mars_m.exceptions import ModeError
from mars_m.linalg import Mat, as_mat, check_same_shape
from mars_m.optim.clip import clip_fro
from mars_m.optim.config import MarsMConfig
from mars_m.optim.moonlight import scaled_update
from mars_m.optim.schedules import momentum_at, schedule_eval
from mars_m.optim.state import MarsMState
from mars_m.polar import orthogonalize


def gamma_at(config: MarsMConfig, t: int) -> float:
    """Correction weight at step t: the constant ``gamma`` unless a schedule overrides it."""
    if config.gamma_schedule is None:
        return config.gamma
    gamma, _ = schedule_eval(config.gamma_schedule, t)
    return gamma


def corrected_gradient(g_cur: Mat, g_ref: Mat | None, beta: float, gamma: float) -> Mat:
    if g_ref is None or gamma == 0.0:
        return g_cur
    return g_cur + gamma * (beta / (1.0 - beta)) * (g_cur - g_ref)


def mars_m_step(
    state: MarsMState,
    x: Mat,
    g_cur: Mat,
    g_prev_same_sample: Mat | None,
    config: MarsMConfig,
) -> Mat:
    """Advance ``state`` by one MARS-M step and return X_{t+1}.

    Args:
        state: Buffers for this parameter. Its ``mode`` must match ``config.mode``.
        x: Current iterate X_t.
        g_cur: Stochastic gradient at X_t under the step's sample.
        g_prev_same_sample: Gradient at ``state.prev_X`` under the same sample.
            Required in exact mode, must be ``None`` in approximate mode.
        config: Hyperparameters.

    Raises:
        ModeError: if the state, config and ``g_prev_same_sample`` disagree on the mode.
        ShapeError: if any operand has a different shape from ``x``.
    """
    if state.mode != config.mode:
        raise ModeError(f"state is in {state.mode} mode but config asks for {config.mode}")
    x, g_cur = as_mat(x, "params"), as_mat(g_cur, "gradient")
    check_same_shape(x, g_cur, "params and gradient")
    check_same_shape(state.M, g_cur, "momentum and gradient")

    if config.mode == "exact":
        if g_prev_same_sample is None:
            raise ModeError("exact mode needs the previous iterate's gradient on this sample")
        g_ref: Mat | None = as_mat(g_prev_same_sample, "previous gradient")
        check_same_shape(g_cur, g_ref, "current and previous gradient")
    else:
        if g_prev_same_sample is not None:
            raise ModeError("approximate mode reuses the stored gradient; pass None")
        g_ref = state.prev_grad

    eta, _ = schedule_eval(config.lr, state.t)
    beta = momentum_at(config.beta, config.lr, state.t)
    c = corrected_gradient(g_cur, g_ref, beta, gamma_at(config, state.t))
    if config.clip_threshold is not None:
        c = clip_fro(c, config.clip_threshold)

    state.M = beta * state.M + (1.0 - beta) * c
    o = orthogonalize(state.M, config.ns, config.orthogonalizer)
    x_next = scaled_update(
        x, o, eta, config.rms_scale, config.weight_decay, config.scale_update
    )

    if config.mode == "exact":
        state.prev_X = x
    else:
        state.prev_grad = g_cur
    state.t += 1
    return x_next
