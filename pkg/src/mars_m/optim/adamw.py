"""AdamW for vector-like parameters."""

from __future__ import annotations

import numpy as np

from mars_m.linalg import Mat, as_mat, check_same_shape
from mars_m.optim.config import AdamWConfig
from mars_m.optim.schedules import schedule_eval
from mars_m.optim.state import AdamWState


def adamw_step(state: AdamWState, x: Mat, g: Mat, config: AdamWConfig) -> Mat:
    """Bias-corrected Adam moments with decoupled weight decay.

    x <- x - lr * lambda * x - lr * m_hat / (sqrt(v_hat) + eps)
    """
    x, g = as_mat(x, "params"), as_mat(g, "gradient")
    check_same_shape(x, g, "params and gradient")
    check_same_shape(state.m, g, "moments and gradient")

    lr, _ = schedule_eval(config.lr, state.t)
    b1, b2 = config.beta1, config.beta2
    state.m = b1 * state.m + (1.0 - b1) * g
    state.v = b2 * state.v + (1.0 - b2) * (g * g)
    m_hat = state.m / (1.0 - b1**state.t)
    v_hat = state.v / (1.0 - b2**state.t)
    state.t += 1
    return x - lr * config.weight_decay * x - lr * m_hat / (np.sqrt(v_hat) + config.eps)
