"""Named parameter sets and problem metadata."""

from __future__ import annotations

from collections.abc import Iterator, Mapping
from dataclasses import dataclass, field

import numpy as np

from mars_m.exceptions import ProblemError, ShapeError
from mars_m.linalg import Mat, as_mat


@dataclass(frozen=True, eq=False)
class ParamSet(Mapping[str, Mat]):
    """Matrix-like and vector-like parameters under unique names.

    Vector-like entries are 2-D with one dimension equal to 1. Iteration
    yields the matrices first, then the vectors, each in insertion order.
    """

    matrices: dict[str, Mat]
    vectors: dict[str, Mat] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clash = self.matrices.keys() & self.vectors.keys()
        if clash:
            raise ProblemError(f"duplicate parameter names: {sorted(clash)}")
        matrices = {name: as_mat(value, name) for name, value in self.matrices.items()}
        vectors: dict[str, Mat] = {}
        for name, value in self.vectors.items():
            value = as_mat(value, name)
            if min(value.shape) != 1:
                raise ShapeError(
                    f"vector parameter {name} must have a unit dimension",
                    actual=value.shape,
                )
            vectors[name] = value
        # the caller's dicts are left untouched
        object.__setattr__(self, "matrices", matrices)
        object.__setattr__(self, "vectors", vectors)

    def __getitem__(self, name: str) -> Mat:
        if name in self.matrices:
            return self.matrices[name]
        return self.vectors[name]

    def __iter__(self) -> Iterator[str]:
        yield from self.matrices
        yield from self.vectors

    def __len__(self) -> int:
        return len(self.matrices) + len(self.vectors)

    def replace(self, values: Mapping[str, Mat]) -> "ParamSet":
        """Same layout, new values; every name must be present with its old shape."""
        missing = set(self) - set(values)
        if missing:
            raise ProblemError(f"missing parameters: {sorted(missing)}")
        for name in self:
            if np.shape(values[name]) != self[name].shape:
                raise ShapeError(
                    f"parameter {name} changed shape",
                    expected=self[name].shape,
                    actual=np.shape(values[name]),
                )
        return ParamSet(
            matrices={k: values[k] for k in self.matrices},
            vectors={k: values[k] for k in self.vectors},
        )

    def fro_norm(self) -> float:
        """Frobenius norm of all blocks stacked together."""
        return float(np.sqrt(sum(float(np.sum(v * v)) for v in self.values())))

    def copy(self) -> "ParamSet":
        return self.replace({k: v.copy() for k, v in self.items()})

    def is_finite(self) -> bool:
        return all(bool(np.all(np.isfinite(v))) for v in self.values())


@dataclass(frozen=True, slots=True)
class ProblemMeta:
    """Analytic constants when known.

    Attributes:
        L: Smoothness constant of f(., xi).
        sigma: Gradient noise standard deviation in Frobenius norm.
        f_min: Minimum of the full objective F.
    """

    L: float | None = None
    sigma: float | None = None
    f_min: float | None = None
