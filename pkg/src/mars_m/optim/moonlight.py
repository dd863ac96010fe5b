"""Moonlight: Muon with a 0.2 sqrt(max(m, n)) update scale and decoupled weight decay."""

from __future__ import annotations

import math

from mars_m.linalg import Mat, as_mat, check_same_shape
from mars_m.optim.clip import clip_fro
from mars_m.optim.config import MoonlightConfig
from mars_m.optim.schedules import momentum_at, schedule_eval
from mars_m.optim.state import MoonlightState, MuonState
from mars_m.polar import newton_schulz


def scaled_update(
    x: Mat,
    o: Mat,
    eta: float,
    rms_scale: float,
    weight_decay: float,
    scale_update: bool = True,
) -> Mat:
    """X - eta (rms_scale O sqrt(max(m, n)) + lambda X)."""
    direction = rms_scale * math.sqrt(max(x.shape)) * o if scale_update else o
    return x - eta * (direction + weight_decay * x)


def moonlight_momentum(state: MoonlightState, g: Mat, beta: float) -> Mat:
    """U <- beta U + g and return the Nesterov feed beta U + g."""
    state.U = beta * state.U + g
    return beta * state.U + g


def moonlight_step(
    state: MoonlightState | MuonState, x: Mat, g: Mat, config: MoonlightConfig
) -> Mat:
    """One Moonlight update; advances ``state`` and returns X_{t+1}.

    With ``config.momentum == "clipped_ema"`` the state is a :class:`MuonState`
    and the momentum is M <- beta M + (1 - beta) clip(g); see
    :func:`clipped_ema_step`.
    """
    if config.momentum == "clipped_ema":
        assert isinstance(state, MuonState)
        return clipped_ema_step(state, x, g, config)
    assert isinstance(state, MoonlightState)

    x, g = as_mat(x, "params"), as_mat(g, "gradient")
    check_same_shape(x, g, "params and gradient")
    check_same_shape(state.U, g, "momentum and gradient")

    eta, _ = schedule_eval(config.lr, state.t)
    beta = momentum_at(config.beta, config.lr, state.t)
    o = newton_schulz(moonlight_momentum(state, g, beta), config.ns)
    state.t += 1
    return scaled_update(x, o, eta, config.rms_scale, config.weight_decay)


def clipped_ema_step(state: MuonState, x: Mat, g: Mat, config: MoonlightConfig) -> Mat:
    """Moonlight update driven by a clipped exponential moving average of gradients."""
    x, g = as_mat(x, "params"), as_mat(g, "gradient")
    check_same_shape(x, g, "params and gradient")
    check_same_shape(state.M, g, "momentum and gradient")

    eta, _ = schedule_eval(config.lr, state.t)
    beta = momentum_at(config.beta, config.lr, state.t)
    if config.clip_threshold is not None:
        g = clip_fro(g, config.clip_threshold)
    state.M = beta * state.M + (1.0 - beta) * g
    o = newton_schulz(state.M, config.ns)
    state.t += 1
    return scaled_update(x, o, eta, config.rms_scale, config.weight_decay)
