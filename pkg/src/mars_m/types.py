"""Core result types for mars-m runs, comparisons and checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

# =============================================================================
# Per-step records
# =============================================================================

CSV_COLUMNS = (
    "step",
    "loss",
    "grad_norm_fro",
    "true_grad_norm",
    "update_rms",
    "eta",
    "elapsed_ns",
)


@dataclass(frozen=True, slots=True)
class RunRecord:
    """One CSV row.

    Row 0 describes X_0. Row t >= 1 describes step t: gradient norms at X_t,
    the step size and pre-lr update RMS of the step, and ``loss`` = F(X_{t+1}).
    """

    step: int
    loss: float
    grad_norm_fro: float
    true_grad_norm: float | None
    update_rms: float
    eta: float
    elapsed_ns: int


# =============================================================================
# Results
# =============================================================================


@dataclass(frozen=True, slots=True)
class RunResult:
    """Result of a full trainer run."""

    run_name: str
    seed: int
    records: list[RunRecord]
    csv_path: Path | None = None
    summary_path: Path | None = None

    @property
    def final_loss(self) -> float:
        return self.records[-1].loss

    @property
    def best_loss(self) -> float:
        return min(r.loss for r in self.records)

    @property
    def tail_grad_norm(self) -> float:
        """Mean gradient norm over the last 10% of recorded steps (at least one row)."""
        steps = [r for r in self.records if r.step > 0] or self.records
        tail = steps[-max(1, len(steps) // 10) :]
        return sum(r.grad_norm_fro for r in tail) / len(tail)


@dataclass(frozen=True, slots=True)
class ComparisonRow:
    """Seed statistics of one config inside a comparison."""

    run_name: str
    seeds: list[int]
    final_loss_mean: float
    final_loss_std: float
    tail_grad_norm_mean: float
    tail_grad_norm_std: float
    rank: int = 0


@dataclass(frozen=True, slots=True)
class CheckResult:
    """Outcome of one verification check."""

    name: str
    passed: bool
    measured: float
    threshold: float
    detail: str = ""


@dataclass(frozen=True, slots=True)
class VerifyReport:
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]
