"""Exception hierarchy for mars-m."""

from __future__ import annotations


class MarsMError(Exception):
    """Base exception for all mars-m errors."""


class ShapeError(MarsMError):
    """A matrix is malformed or two matrices disagree in shape."""

    def __init__(
        self,
        message: str,
        expected: tuple[int, ...] | None = None,
        actual: tuple[int, ...] | None = None,
    ) -> None:
        super().__init__(message)
        self.expected = expected
        self.actual = actual


class NonFiniteError(MarsMError):
    """A NaN or Inf showed up in a matrix or mid-run."""

    def __init__(self, message: str, step: int | None = None) -> None:
        super().__init__(message)
        self.step = step


class ConvergenceError(MarsMError):
    """Jacobi sweeps hit the cap before the off-diagonal mass fell below tol."""

    def __init__(self, message: str, sweeps: int, off_diagonal: float) -> None:
        super().__init__(message)
        self.sweeps = sweeps
        self.off_diagonal = off_diagonal


class DegenerateInputError(MarsMError):
    """Input has no well-defined result (e.g. polar factor of zero)."""


class ModeError(MarsMError):
    """Arguments do not match the configured MARS-M mode."""


class ScheduleRangeError(MarsMError):
    """Step index outside the domain of a schedule."""

    def __init__(self, message: str, t: int) -> None:
        super().__init__(message)
        self.t = t


class ConfigError(MarsMError):
    """Run configuration could not be resolved."""

    def __init__(self, message: str, key: str | None = None) -> None:
        super().__init__(message)
        self.key = key


class ProblemError(MarsMError):
    """A problem was given parameters or sampling settings it cannot serve."""


class SlopeFitError(MarsMError):
    """A metrics column cannot be fitted."""


class RunError(MarsMError):
    """A run inside a comparison failed."""

    def __init__(self, message: str, run_name: str, seed: int) -> None:
        super().__init__(message)
        self.run_name = run_name
        self.seed = seed
