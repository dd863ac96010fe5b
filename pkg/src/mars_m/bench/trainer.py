"""Trainer - the optimizer/problem loop behind ``run`` and ``compare``."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

from mars_m._version import __version__
from mars_m.bench.config import RunConfig
from mars_m.bench.records import write_csv, write_summary
from mars_m.events.observer import NullObserver, Observer
from mars_m.events.types import RunEndEvent, RunStartEvent, StepEvent
from mars_m.exceptions import NonFiniteError
from mars_m.optim.group import ParamSetOptimizer
from mars_m.problems.params import ParamSet
from mars_m.problems.protocol import Problem
from mars_m.problems.registry import build_problem
from mars_m.problems.sampling import Sample
from mars_m.types import RunRecord, RunResult


def _norm(params: ParamSet | None) -> float | None:
    return None if params is None else params.fro_norm()


@dataclass
class Trainer:
    """Runs one (config, seed) trajectory.

    Each step t draws ``Sample(seed, t)``, evaluates the gradient at X_t (and,
    for exact MARS-M, at the optimizer's reference point under the same
    sample), and applies one optimizer step.

    Args:
        config: Resolved run configuration.
        observer: Event observer for lifecycle events.
        write_files: Write the CSV and summary sidecar under ``config.run.out``.
        problem: Prebuilt problem; built from ``config.problem`` when omitted.
    """

    config: RunConfig
    observer: Observer = field(default_factory=NullObserver)
    write_files: bool = True
    problem: Problem | None = None

    def __post_init__(self) -> None:
        if self.problem is None:
            self.problem = build_problem(self.config.problem)

    async def run(self) -> RunResult:
        """Execute the full loop."""
        cfg = self.config
        problem = self.problem
        assert problem is not None
        seed, steps, stride = cfg.run.seed, cfg.run.steps, cfg.run.stride

        params = problem.init_params(seed)
        optimizer = ParamSetOptimizer(cfg.optimizer, params, cfg.vector_optimizer)

        await self.observer.emit(
            RunStartEvent(
                run_name=cfg.run.name,
                seed=seed,
                problem=problem.name,
                optimizer=cfg.optimizer.name,
                steps=steps,
            )
        )
        start = time.perf_counter_ns()

        grad0 = problem.grad(params, Sample(seed, 0))
        records = [
            RunRecord(
                step=0,
                loss=float(problem.objective(params)),
                grad_norm_fro=grad0.fro_norm(),
                true_grad_norm=_norm(problem.true_grad(params)),
                update_rms=0.0,
                eta=0.0,
                elapsed_ns=time.perf_counter_ns() - start,
            )
        ]

        for t in range(1, steps + 1):
            recorded = t % stride == 0 or t == steps
            try:
                sample = Sample(seed, t)
                grads = problem.grad(params, sample)
                ref_grads = None
                if optimizer.needs_reference_gradient:
                    reference = params.replace(optimizer.reference_point(params))
                    ref_grads = problem.grad(reference, sample)
                true_norm = _norm(problem.true_grad(params)) if recorded else None
                new, report = optimizer.step(params, grads, ref_grads)
                params = params.replace(new)
                loss = float(problem.objective(params)) if recorded else 0.0
                if not math.isfinite(loss):
                    raise NonFiniteError("loss is not finite")
            except NonFiniteError as exc:
                raise NonFiniteError(f"step {t}: {exc}", step=t) from exc

            if not recorded:
                continue
            record = RunRecord(
                step=t,
                loss=loss,
                grad_norm_fro=grads.fro_norm(),
                true_grad_norm=true_norm,
                update_rms=report.update_rms,
                eta=report.eta,
                elapsed_ns=time.perf_counter_ns() - start,
            )
            records.append(record)
            await self.observer.emit(
                StepEvent(
                    run_name=cfg.run.name,
                    seed=seed,
                    step=t,
                    loss=record.loss,
                    grad_norm_fro=record.grad_norm_fro,
                    eta=record.eta,
                )
            )

        result = RunResult(run_name=cfg.run.name, seed=seed, records=records)
        if self.write_files:
            result = RunResult(
                run_name=result.run_name,
                seed=seed,
                records=records,
                csv_path=write_csv(cfg.csv_path(), records),
                summary_path=write_summary(cfg.summary_path(), cfg, result, __version__),
            )

        await self.observer.emit(
            RunEndEvent(
                run_name=cfg.run.name,
                seed=seed,
                steps=steps,
                final_loss=result.final_loss,
                best_loss=result.best_loss,
                total_duration_ms=(time.perf_counter_ns() - start) // 1_000_000,
            )
        )
        return result


async def run(config: RunConfig, observer: Observer | None = None) -> RunResult:
    """Run one config and write its CSV and summary."""
    return await Trainer(config, observer=observer or NullObserver()).run()
