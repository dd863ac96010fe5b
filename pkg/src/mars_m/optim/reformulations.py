"""Bare momentum recurrences behind the equivalence checks.

None of these touch parameters; they only advance :class:`RecurrenceState`
and return the momentum. Clipping is off throughout.
"""

from __future__ import annotations

from mars_m.linalg import Mat, as_mat, check_same_shape
from mars_m.optim.state import RecurrenceState


def approximate_momentum_step(
    state: RecurrenceState,
    g: Mat,
    beta: float,
    gamma: float,
    grad_scale: float = 1.0,
) -> Mat:
    """M <- beta M + (1 - beta) (s g + gamma beta / (1 - beta) (g - g_prev)).

    ``grad_scale`` (s) multiplies only the fresh gradient term; s = 1 is the
    approximate MARS-M momentum.
    """
    g = as_mat(g, "gradient")
    check_same_shape(state.M, g, "momentum and gradient")
    c = grad_scale * g + gamma * (beta / (1.0 - beta)) * (g - state.prev_grad)
    state.M = beta * state.M + (1.0 - beta) * c
    state.prev_grad = g
    state.t += 1
    return state.M


def adjusted_recurrence_step(state: RecurrenceState, g: Mat, beta: float, gamma: float) -> Mat:
    """Two-buffer form of the approximate MARS-M momentum.

    U <- beta U + (1 - gamma)(1 - beta)/beta g, then M = beta U + gamma g.
    """
    if not 0.0 < beta < 1.0:
        raise ValueError("beta must lie in (0, 1)")
    g = as_mat(g, "gradient")
    check_same_shape(state.U, g, "momentum and gradient")
    state.U = beta * state.U + (1.0 - gamma) * (1.0 - beta) / beta * g
    state.M = beta * state.U + gamma * g
    state.prev_grad = g
    state.t += 1
    return state.M


def moonlight_reformulated_step(state: RecurrenceState, g: Mat, beta: float) -> Mat:
    """Moonlight's Nesterov momentum written as a MARS-style correction.

    Fresh gradient scaled by 1/(1 - beta) and gamma = 1, which expands to
    M = beta M + (1 + beta) g - beta g_prev.
    """
    return approximate_momentum_step(state, g, beta, gamma=1.0, grad_scale=1.0 / (1.0 - beta))
