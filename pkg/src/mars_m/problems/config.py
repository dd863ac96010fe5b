"""Problem settings, selected in run files by ``problem: {name: ...}``."""

from __future__ import annotations

from typing import Annotated, Literal, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationInfo, field_validator, model_validator


class _ProblemBase(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")


class QuadraticConfig(_ProblemBase):
    """f(X, xi) = 1/2 ||A (X - X*)||_F^2 + <Xi, X>, started from X_0 = 0."""

    name: Literal["quadratic"] = "quadratic"
    m: int = Field(default=8, ge=1)
    n: int = Field(default=8, ge=1)
    sigma: float = Field(default=1.0, ge=0.0)
    # ratio of the largest to the smallest singular value of A; 1 gives A = I
    condition: float = Field(default=1.0, ge=1.0)
    # X* entries are N(0, x_star_scale^2)
    x_star_scale: float = Field(default=1.0, ge=0.0)
    problem_seed: int = Field(default=0, ge=0)


class LowRankConfig(_ProblemBase):
    """f(P, Q, xi) = 1/2 ||P Q - T||_F^2 + <Xi_P, P> + <Xi_Q, Q> for a rank-r target T."""

    name: Literal["lowrank"] = "lowrank"
    m: int = Field(default=16, ge=1)
    n: int = Field(default=12, ge=1)
    rank: int = Field(default=4, ge=1)
    sigma: float = Field(default=0.1, ge=0.0)
    init_scale: float = Field(default=0.1, gt=0.0)
    problem_seed: int = Field(default=0, ge=0)

    @model_validator(mode="after")
    def _rank_fits(self) -> "LowRankConfig":
        if self.rank > min(self.m, self.n):
            raise ValueError("rank must not exceed min(m, n)")
        return self


class MlpConfig(_ProblemBase):
    """tanh network with one hidden layer on a Gaussian-mixture classification set."""

    name: Literal["mlp"] = "mlp"
    input_dim: int = Field(default=32, ge=1)
    hidden: int = Field(default=64, ge=1)
    classes: int = Field(default=4, ge=2)
    clusters_per_class: int = Field(default=2, ge=1)
    dataset_size: int = Field(default=4096, ge=1)
    batch: int = Field(default=64, ge=1)
    # per-coordinate standard deviation of points around their cluster centre
    spread: float = Field(default=1.0, gt=0.0)
    data_seed: int = Field(default=0, ge=0)

    @field_validator("batch")
    @classmethod
    def _batch_fits(cls, batch: int, info: ValidationInfo) -> int:
        size = info.data.get("dataset_size")
        if size is not None and batch > size:
            raise ValueError(f"batch {batch} is larger than the dataset ({size})")
        return batch


ProblemConfig = Annotated[
    Union[QuadraticConfig, LowRankConfig, MlpConfig],
    Field(discriminator="name"),
]
