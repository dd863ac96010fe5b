"""Noisy low-rank factorization: a nonconvex problem with two matrix parameters."""

from __future__ import annotations

import math

import numpy as np

from mars_m.linalg import Mat, fro_norm, inner, spectral_norm
from mars_m.problems.config import LowRankConfig
from mars_m.problems.params import ParamSet, ProblemMeta
from mars_m.problems.sampling import Sample, keyed_generator


class LowRankFactorization:
    """F(P, Q) = 1/2 ||P Q - T||_F^2 for a rank-``rank`` target T.

    Noise is split evenly over the entries of P and Q so the stacked noise
    has E ||Xi||_F^2 = sigma^2.
    """

    name = "lowrank"

    def __init__(self, config: LowRankConfig | None = None) -> None:
        self.config = config or LowRankConfig()
        m, n, r = self.config.m, self.config.n, self.config.rank
        rng = keyed_generator(self.config.problem_seed, "lowrank")
        self.target = (rng.standard_normal((m, r)) @ rng.standard_normal((r, n))) / math.sqrt(r)
        self._shapes = {"P": (m, r), "Q": (r, n)}
        self._noise_scale = self.config.sigma / math.sqrt(m * r + r * n)

    @classmethod
    def from_target(cls, target: Mat, rank: int, sigma: float) -> "LowRankFactorization":
        m, n = target.shape
        problem = cls(LowRankConfig(m=m, n=n, rank=rank, sigma=sigma))
        problem.target = np.asarray(target, dtype=np.float64)
        return problem

    @property
    def meta(self) -> ProblemMeta:
        return ProblemMeta(sigma=self.config.sigma, f_min=0.0)

    def local_smoothness(self, radius: float) -> float:
        """Lipschitz constant of the gradient where ||P||_2 and ||Q||_2 are at most ``radius``.

        The problem is not globally smooth; on that region the gradient map
        satisfies ||grad(X) - grad(Y)||_F <= 2 (2 radius^2 + ||T||_2) ||X - Y||_F
        for any shared sample.
        """
        return 2.0 * (2.0 * radius**2 + spectral_norm(self.target))

    def init_params(self, seed: int) -> ParamSet:
        scale = self.config.init_scale
        return ParamSet(
            matrices={
                name: scale * keyed_generator(seed, "init", name).standard_normal(shape)
                for name, shape in self._shapes.items()
            }
        )

    def _noise(self, sample: Sample) -> dict[str, Mat]:
        return {
            name: self._noise_scale * sample.generator("noise", name).standard_normal(shape)
            for name, shape in self._shapes.items()
        }

    def _residual(self, params: ParamSet) -> Mat:
        return params["P"] @ params["Q"] - self.target

    def loss_and_grad(self, params: ParamSet, sample: Sample) -> tuple[float, ParamSet]:
        p, q = params["P"], params["Q"]
        noise = self._noise(sample)
        residual = self._residual(params)
        loss = 0.5 * fro_norm(residual) ** 2 + inner(noise["P"], p) + inner(noise["Q"], q)
        grads = {
            "P": residual @ q.T + noise["P"],
            "Q": p.T @ residual + noise["Q"],
        }
        return loss, params.replace(grads)

    def grad(self, params: ParamSet, sample: Sample) -> ParamSet:
        return self.loss_and_grad(params, sample)[1]

    def objective(self, params: ParamSet) -> float:
        return 0.5 * fro_norm(self._residual(params)) ** 2

    def true_grad(self, params: ParamSet) -> ParamSet:
        residual = self._residual(params)
        return params.replace({"P": residual @ params["Q"].T, "Q": params["P"].T @ residual})
