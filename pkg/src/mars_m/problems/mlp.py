"""Synthetic two-layer classifier.

The dataset is a Gaussian mixture with ``clusters_per_class`` centres per
class, generated once from ``data_seed``. Minibatches are drawn with
replacement from the sample's generator. Biases are column vectors and so go
to the vector optimizer.
"""

from __future__ import annotations

import math

import numpy as np

from mars_m.exceptions import ProblemError
from mars_m.linalg import Mat
from mars_m.problems.config import MlpConfig
from mars_m.problems.params import ParamSet, ProblemMeta
from mars_m.problems.sampling import Sample, keyed_generator


def _log_softmax(logits: Mat) -> Mat:
    shifted = logits - logits.max(axis=1, keepdims=True)
    return shifted - np.log(np.exp(shifted).sum(axis=1, keepdims=True))


class SyntheticMLP:
    """tanh(W1 x + b1) -> W2 h + b2 -> softmax cross-entropy, with manual backprop."""

    name = "mlp"

    def __init__(self, config: MlpConfig | None = None) -> None:
        self.config = config or MlpConfig()
        cfg = self.config
        if cfg.batch > cfg.dataset_size:
            raise ProblemError(
                f"batch {cfg.batch} is larger than the dataset ({cfg.dataset_size})"
            )
        rng = keyed_generator(cfg.data_seed, "mlp-data")
        n_clusters = cfg.classes * cfg.clusters_per_class
        centres = rng.standard_normal((n_clusters, cfg.input_dim))
        cluster = np.arange(cfg.dataset_size) % n_clusters
        self.inputs = centres[cluster] + cfg.spread * rng.standard_normal(
            (cfg.dataset_size, cfg.input_dim)
        )
        self.labels = cluster // cfg.clusters_per_class
        self._shapes = {
            "W1": (cfg.hidden, cfg.input_dim),
            "W2": (cfg.classes, cfg.hidden),
        }

    @property
    def meta(self) -> ProblemMeta:
        return ProblemMeta(f_min=0.0)

    def init_params(self, seed: int) -> ParamSet:
        matrices = {
            name: keyed_generator(seed, "init", name).standard_normal(shape)
            / math.sqrt(shape[1])
            for name, shape in self._shapes.items()
        }
        vectors = {
            "b1": np.zeros((self.config.hidden, 1)),
            "b2": np.zeros((self.config.classes, 1)),
        }
        return ParamSet(matrices=matrices, vectors=vectors)

    def batch_indices(self, sample: Sample) -> np.ndarray:
        return sample.generator("batch").integers(
            0, self.config.dataset_size, size=self.config.batch
        )

    def forward_backward(
        self, params: ParamSet, inputs: Mat, labels: np.ndarray
    ) -> tuple[float, ParamSet]:
        """Mean cross-entropy over ``inputs`` and its exact gradient."""
        w1, b1, w2, b2 = params["W1"], params["b1"], params["W2"], params["b2"]
        count = inputs.shape[0]
        hidden = np.tanh(inputs @ w1.T + b1.T)
        log_probs = _log_softmax(hidden @ w2.T + b2.T)
        rows = np.arange(count)
        loss = -float(log_probs[rows, labels].mean())

        d_logits = np.exp(log_probs)
        d_logits[rows, labels] -= 1.0
        d_logits /= count
        d_hidden = (d_logits @ w2) * (1.0 - hidden**2)
        grads = {
            "W1": d_hidden.T @ inputs,
            "b1": d_hidden.sum(axis=0)[:, None],
            "W2": d_logits.T @ hidden,
            "b2": d_logits.sum(axis=0)[:, None],
        }
        return loss, params.replace(grads)

    def loss_and_grad(self, params: ParamSet, sample: Sample) -> tuple[float, ParamSet]:
        idx = self.batch_indices(sample)
        return self.forward_backward(params, self.inputs[idx], self.labels[idx])

    def grad(self, params: ParamSet, sample: Sample) -> ParamSet:
        return self.loss_and_grad(params, sample)[1]

    def objective(self, params: ParamSet) -> float:
        return self.forward_backward(params, self.inputs, self.labels)[0]

    def true_grad(self, params: ParamSet) -> ParamSet:
        return self.forward_backward(params, self.inputs, self.labels)[1]
