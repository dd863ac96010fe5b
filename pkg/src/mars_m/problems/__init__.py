"""Seeded stochastic problems with re-evaluable gradient oracles."""

from mars_m.problems.config import LowRankConfig, MlpConfig, ProblemConfig, QuadraticConfig
from mars_m.problems.lowrank import LowRankFactorization
from mars_m.problems.mlp import SyntheticMLP
from mars_m.problems.params import ParamSet, ProblemMeta
from mars_m.problems.protocol import Problem
from mars_m.problems.quadratic import NoisyQuadratic
from mars_m.problems.registry import build_problem, problem_names
from mars_m.problems.sampling import Sample, keyed_generator

__all__ = [
    "LowRankConfig",
    "LowRankFactorization",
    "MlpConfig",
    "NoisyQuadratic",
    "ParamSet",
    "Problem",
    "ProblemConfig",
    "ProblemMeta",
    "QuadraticConfig",
    "Sample",
    "SyntheticMLP",
    "build_problem",
    "keyed_generator",
    "problem_names",
]
