"""Problem protocol."""

from __future__ import annotations

from typing import Protocol

from mars_m.problems.params import ParamSet, ProblemMeta
from mars_m.problems.sampling import Sample


class Problem(Protocol):
    """A stochastic objective F(X) = E f(X, xi) with re-evaluable gradient oracles.

    ``loss_and_grad`` must use the same noise or minibatch for every ``params``
    given the same ``sample``.
    """

    name: str

    @property
    def meta(self) -> ProblemMeta: ...

    def init_params(self, seed: int) -> ParamSet:
        """Starting point X_0 for the trajectory seeded by ``seed``."""
        ...

    def loss_and_grad(self, params: ParamSet, sample: Sample) -> tuple[float, ParamSet]:
        """f(X, xi) and its gradient."""
        ...

    def grad(self, params: ParamSet, sample: Sample) -> ParamSet: ...

    def objective(self, params: ParamSet) -> float:
        """Full objective F(X)."""
        ...

    def true_grad(self, params: ParamSet) -> ParamSet | None:
        """Noise-free gradient of F, or None when the problem cannot form it."""
        ...
