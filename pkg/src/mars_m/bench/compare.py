"""Multi-config, multi-seed comparison with a ranked table."""

from __future__ import annotations

import asyncio
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Sequence

import numpy as np

from mars_m.bench.config import RunConfig
from mars_m.bench.trainer import Trainer
from mars_m.events.observer import NullObserver, Observer
from mars_m.exceptions import ConfigError, MarsMError, RunError
from mars_m.types import ComparisonRow, RunResult

COMPARISON_COLUMNS = (
    "rank",
    "run",
    "seeds",
    "final_loss_mean",
    "final_loss_std",
    "tail_grad_norm_mean",
    "tail_grad_norm_std",
)


@dataclass(frozen=True, slots=True)
class ComparisonReport:
    rows: list[ComparisonRow]
    results: dict[str, list[RunResult]]
    csv_path: Path | None = None

    def table(self) -> str:
        """Fixed-width text rendering, best config first."""
        header = f"{'rank':>4}  {'run':<24} {'final loss':>26} {'tail |g|':>26}"
        lines = [header, "-" * len(header)]
        for row in self.rows:
            loss = f"{row.final_loss_mean:.6g} +- {row.final_loss_std:.3g}"
            grad = f"{row.tail_grad_norm_mean:.6g} +- {row.tail_grad_norm_std:.3g}"
            lines.append(f"{row.rank:>4}  {row.run_name:<24} {loss:>26} {grad:>26}")
        return "\n".join(lines)


def _std(values: list[float]) -> float:
    return float(np.std(values, ddof=1)) if len(values) > 1 else 0.0


def summarize(results: dict[str, list[RunResult]]) -> list[ComparisonRow]:
    """Per-config seed statistics, ranked by mean final loss (stable on ties)."""
    rows = []
    for name, runs in results.items():
        finals = [r.final_loss for r in runs]
        tails = [r.tail_grad_norm for r in runs]
        rows.append(
            ComparisonRow(
                run_name=name,
                seeds=[r.seed for r in runs],
                final_loss_mean=float(np.mean(finals)),
                final_loss_std=_std(finals),
                tail_grad_norm_mean=float(np.mean(tails)),
                tail_grad_norm_std=_std(tails),
            )
        )
    ordered = sorted(rows, key=lambda row: row.final_loss_mean)
    return [replace(row, rank=rank) for rank, row in enumerate(ordered, start=1)]


def write_comparison_csv(path: Path, rows: list[ComparisonRow]) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = [",".join(COMPARISON_COLUMNS)]
    for r in rows:
        lines.append(
            ",".join(
                (
                    str(r.rank),
                    r.run_name,
                    " ".join(str(s) for s in r.seeds),
                    repr(r.final_loss_mean),
                    repr(r.final_loss_std),
                    repr(r.tail_grad_norm_mean),
                    repr(r.tail_grad_norm_std),
                )
            )
        )
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


async def compare(
    configs: Sequence[RunConfig],
    seeds: Sequence[int],
    out: Path | None = None,
    observer: Observer | None = None,
    max_concurrency: int = 4,
    write_files: bool = True,
) -> ComparisonReport:
    """Run every (config, seed) pair and rank the configs.

    Per-run CSVs land next to ``comparison.csv`` in ``out`` (or each config's
    own ``run.out``).

    Raises:
        ConfigError: for fewer than two configs, no seeds, or duplicate run names.
        RunError: naming the (config, seed) whose run failed.
    """
    if len(configs) < 2:
        raise ConfigError("compare needs at least two configs")
    if not seeds:
        raise ConfigError("compare needs at least one seed")
    names = [c.name for c in configs]
    if len(set(names)) != len(names):
        raise ConfigError(f"run names must be distinct, got {names}", key="run.name")

    observer = observer or NullObserver()
    sem = asyncio.Semaphore(max(1, max_concurrency))

    async def run_one(config: RunConfig, seed: int) -> RunResult:
        resolved = config.with_run(seed=seed, out=out)
        async with sem:
            try:
                return await Trainer(resolved, observer=observer, write_files=write_files).run()
            except MarsMError as exc:
                raise RunError(
                    f"run {resolved.name} with seed {seed} failed: {exc}",
                    run_name=resolved.name,
                    seed=seed,
                ) from exc

    pairs = [(c, s) for c in configs for s in seeds]
    finished = await asyncio.gather(*[run_one(c, s) for c, s in pairs])

    results: dict[str, list[RunResult]] = {c.name: [] for c in configs}
    for (config, _), result in zip(pairs, finished):
        results[config.name].append(result)
    rows = summarize(results)

    csv_path = None
    if write_files:
        target = out if out is not None else configs[0].run.out
        csv_path = write_comparison_csv(target / "comparison.csv", rows)
    return ComparisonReport(rows=rows, results=results, csv_path=csv_path)
