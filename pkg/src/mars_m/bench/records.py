"""CSV metrics files and YAML summary sidecars."""

from __future__ import annotations

from pathlib import Path
from typing import Any

import numpy as np
import yaml

from mars_m.bench.config import RunConfig
from mars_m.exceptions import SlopeFitError
from mars_m.types import CSV_COLUMNS, RunRecord, RunResult


def _field(value: float | None) -> str:
    # repr of a builtin float is locale-independent and round-trips exactly
    if value is None:
        return ""
    return repr(float(value))


def format_csv(records: list[RunRecord]) -> str:
    lines = [",".join(CSV_COLUMNS)]
    for r in records:
        lines.append(
            ",".join(
                (
                    str(r.step),
                    _field(r.loss),
                    _field(r.grad_norm_fro),
                    _field(r.true_grad_norm),
                    _field(r.update_rms),
                    _field(r.eta),
                    str(r.elapsed_ns),
                )
            )
        )
    return "\n".join(lines) + "\n"


def write_csv(path: Path, records: list[RunRecord]) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8", newline="") as fh:
        fh.write(format_csv(records))
    return path


def read_column(path: str | Path, column: str) -> tuple[np.ndarray, np.ndarray]:
    """Return ``(step, values)`` for ``column``; empty fields become NaN.

    Raises:
        SlopeFitError: if the file or the column does not exist.
    """
    path = Path(path)
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except FileNotFoundError as exc:
        raise SlopeFitError(f"metrics file not found: {path}") from exc
    if not lines:
        raise SlopeFitError(f"{path} is empty")
    header = lines[0].split(",")
    if column not in header:
        raise SlopeFitError(f"{path} has no column {column!r}")
    if "step" not in header:
        raise SlopeFitError(f"{path} has no step column")
    col, step_col = header.index(column), header.index("step")
    steps, values = [], []
    for line in lines[1:]:
        if not line:
            continue
        fields = line.split(",")
        steps.append(int(fields[step_col]))
        raw = fields[col]
        values.append(float(raw) if raw else float("nan"))
    return np.asarray(steps, dtype=np.int64), np.asarray(values, dtype=np.float64)


def summary_dict(config: RunConfig, result: RunResult, version: str) -> dict[str, Any]:
    summary: dict[str, Any] = {
        "version": version,
        "run": config.run.name,
        "seed": config.run.seed,
        "steps": config.run.steps,
        "final_loss": result.final_loss,
        "best_loss": result.best_loss,
        "tail_grad_norm_mean": result.tail_grad_norm,
        "config": config.model_dump(mode="json"),
    }
    if config.optimizer.name != "adamw" and config.vector_optimizer is None:
        summary["vector_schedule"] = "shared with optimizer.lr"
    return summary


def write_summary(path: Path, config: RunConfig, result: RunResult, version: str) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    text = yaml.safe_dump(summary_dict(config, result, version), sort_keys=False)
    path.write_text(text, encoding="utf-8")
    return path
