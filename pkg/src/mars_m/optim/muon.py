"""Muon: momentum orthogonalized by Newton-Schulz, no scaling and no weight decay."""

from __future__ import annotations

from mars_m.linalg import Mat, as_mat, check_same_shape
from mars_m.optim.config import MuonConfig
from mars_m.optim.schedules import momentum_at, schedule_eval
from mars_m.optim.state import MuonState
from mars_m.polar import newton_schulz


def muon_step(state: MuonState, x: Mat, g: Mat, config: MuonConfig) -> Mat:
    """One Muon update; advances ``state`` and returns X_{t+1} = X_t - eta_t O_t.

    M <- beta M + g (or (1 - beta) g when ``dampened``); O is Newton-Schulz of
    beta M + g when ``nesterov_feed`` is on, else of M.
    """
    x, g = as_mat(x, "params"), as_mat(g, "gradient")
    check_same_shape(x, g, "params and gradient")
    check_same_shape(state.M, g, "momentum and gradient")

    eta, _ = schedule_eval(config.lr, state.t)
    beta = momentum_at(config.beta, config.lr, state.t)
    feed = (1.0 - beta) * g if config.dampened else g

    state.M = beta * state.M + feed
    target = beta * state.M + feed if config.nesterov_feed else state.M
    o = newton_schulz(target, config.ns)
    state.t += 1
    return x - eta * o
