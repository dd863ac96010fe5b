"""Noisy quadratic with exactly known smoothness and noise level."""

from __future__ import annotations

import math

import numpy as np

from mars_m.linalg import Mat, as_mat, fro_norm, inner, jacobi_svd
from mars_m.problems.config import QuadraticConfig
from mars_m.problems.params import ParamSet, ProblemMeta
from mars_m.problems.sampling import Sample, keyed_generator

PARAM = "X"


class NoisyQuadratic:
    """F(X) = 1/2 ||A (X - X*)||_F^2 with additive Gaussian gradient noise.

    Noise entries have variance sigma^2 / (m n) so E ||Xi||_F^2 = sigma^2.
    """

    name = "quadratic"

    def __init__(self, config: QuadraticConfig | None = None) -> None:
        self.config = config or QuadraticConfig()
        m, n = self.config.m, self.config.n
        rng = keyed_generator(self.config.problem_seed, "quadratic")
        if self.config.condition == 1.0:
            self.A = np.eye(m)
        else:
            left, _ = np.linalg.qr(rng.standard_normal((m, m)))
            right, _ = np.linalg.qr(rng.standard_normal((m, m)))
            s = np.geomspace(1.0, 1.0 / self.config.condition, m)
            self.A = (left * s) @ right.T
        self.x_star = self.config.x_star_scale * rng.standard_normal((m, n))
        self.hessian = self.A.T @ self.A
        self._noise_scale = self.config.sigma / math.sqrt(m * n)
        s_max = float(jacobi_svd(self.A).S[0])
        self._meta = ProblemMeta(L=s_max**2, sigma=self.config.sigma, f_min=0.0)

    @classmethod
    def from_matrices(cls, A: Mat, x_star: Mat, sigma: float) -> "NoisyQuadratic":
        """Build around a given ``A`` and ``X*`` instead of drawing them."""
        A, x_star = as_mat(A, "A"), as_mat(x_star, "X*")
        if A.shape[0] != A.shape[1] or A.shape[1] != x_star.shape[0]:
            raise ValueError(f"A {A.shape} does not act on X* {x_star.shape}")
        problem = cls(QuadraticConfig(m=x_star.shape[0], n=x_star.shape[1], sigma=sigma))
        problem.A = A
        problem.x_star = x_star
        problem.hessian = A.T @ A
        problem._meta = ProblemMeta(
            L=float(jacobi_svd(A).S[0]) ** 2, sigma=sigma, f_min=0.0
        )
        return problem

    @property
    def meta(self) -> ProblemMeta:
        return self._meta

    def init_params(self, seed: int) -> ParamSet:
        return ParamSet(matrices={PARAM: np.zeros_like(self.x_star)})

    def noise(self, sample: Sample) -> Mat:
        """Xi(xi_t); depends on the sample only."""
        return self._noise_scale * sample.generator("noise", PARAM).standard_normal(
            self.x_star.shape
        )

    def loss_and_grad(self, params: ParamSet, sample: Sample) -> tuple[float, ParamSet]:
        x = params[PARAM]
        noise = self.noise(sample)
        residual = self.A @ (x - self.x_star)
        loss = 0.5 * fro_norm(residual) ** 2 + inner(noise, x)
        grad = self.A.T @ residual + noise
        return loss, params.replace({PARAM: grad})

    def grad(self, params: ParamSet, sample: Sample) -> ParamSet:
        return self.loss_and_grad(params, sample)[1]

    def objective(self, params: ParamSet) -> float:
        return 0.5 * fro_norm(self.A @ (params[PARAM] - self.x_star)) ** 2

    def true_grad(self, params: ParamSet) -> ParamSet:
        return params.replace({PARAM: self.hessian @ (params[PARAM] - self.x_star)})
