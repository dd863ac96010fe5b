"""``mars-m`` command line.

Exit codes: 0 success, 1 verification failure, 2 configuration or input
error, 3 non-finite values mid-run.
"""

from __future__ import annotations

import argparse
import asyncio
import sys
from pathlib import Path
from typing import Sequence

from mars_m.bench.compare import compare
from mars_m.bench.config import load_run_config
from mars_m.bench.slope import fit_slope
from mars_m.bench.trainer import Trainer
from mars_m.bench.verify import VerifySettings, verify
from mars_m.events.observer import (
    CompositeObserver,
    ConsoleObserver,
    JsonlObserver,
    NullObserver,
    Observer,
)
from mars_m.exceptions import (
    ConfigError,
    MarsMError,
    ModeError,
    NonFiniteError,
    ProblemError,
    RunError,
    ScheduleRangeError,
    ShapeError,
    SlopeFitError,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_CONFIG = 2
EXIT_NON_FINITE = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mars-m", description="Matrix optimizer benchmarks and verification"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="run one config and write its CSV and summary")
    run_p.add_argument("--config", type=Path, required=True)
    run_p.add_argument("--out", type=Path, default=None, help="override run.out")
    run_p.add_argument("--seed", type=int, default=None, help="override run.seed")
    run_p.add_argument("--quiet", action="store_true")
    run_p.add_argument("--events", type=Path, default=None, help="also write events as JSON lines")

    cmp_p = sub.add_parser("compare", help="run several configs over several seeds")
    cmp_p.add_argument("--config", type=Path, nargs="+", required=True)
    cmp_p.add_argument("--seeds", type=int, nargs="+", default=[0, 1, 2])
    cmp_p.add_argument("--out", type=Path, default=None)
    cmp_p.add_argument("--max-concurrency", type=int, default=4)
    cmp_p.add_argument("--quiet", action="store_true")
    cmp_p.add_argument("--events", type=Path, default=None, help="also write events as JSON lines")

    fit_p = sub.add_parser("fit-slope", help="log-log slope of a metrics column")
    fit_p.add_argument("csv", type=Path)
    fit_p.add_argument("--column", default="true_grad_norm")
    fit_p.add_argument("--burn-in", type=float, default=0.1)
    fit_p.add_argument("--raw", action="store_true", help="fit the column, not its running average")

    ver_p = sub.add_parser("verify", help="run the verification suite")
    ver_p.add_argument("--seed", type=int, default=0)
    ver_p.add_argument("--ns-quintic-steps", type=int, default=5)
    ver_p.add_argument("--clip-threshold", type=float, default=1.0)
    ver_p.add_argument("--quiet", action="store_true")
    return parser


def _observer(quiet: bool, events: Path | None = None) -> Observer:
    observers: list[Observer] = [] if quiet else [ConsoleObserver()]
    if events is not None:
        observers.append(JsonlObserver(events))
    if not observers:
        return NullObserver()
    return observers[0] if len(observers) == 1 else CompositeObserver(observers)


async def _run(args: argparse.Namespace) -> int:
    config = load_run_config(args.config).with_run(seed=args.seed, out=args.out)
    result = await Trainer(config, observer=_observer(args.quiet, args.events)).run()
    print(result.csv_path)
    print(result.summary_path)
    return EXIT_OK


async def _compare(args: argparse.Namespace) -> int:
    configs = [load_run_config(path) for path in args.config]
    report = await compare(
        configs,
        args.seeds,
        out=args.out,
        observer=_observer(args.quiet, args.events),
        max_concurrency=args.max_concurrency,
    )
    print(report.table())
    print(report.csv_path)
    return EXIT_OK


def _fit_slope(args: argparse.Namespace) -> int:
    slope = fit_slope(args.csv, args.column, args.burn_in, cesaro=not args.raw)
    print(f"{slope:.6f}")
    return EXIT_OK


async def _verify(args: argparse.Namespace) -> int:
    settings = VerifySettings(
        seed=args.seed,
        ns_quintic_steps=args.ns_quintic_steps,
        clip_threshold=args.clip_threshold,
    )
    console = ConsoleObserver(stream=sys.stdout)
    report = await verify(settings, observer=NullObserver() if args.quiet else console)
    if args.quiet:
        for check in report.failures:
            print(f"FAIL {check.name}: measured={check.measured:.6g} threshold={check.threshold:.6g}")
    passed = len(report.checks) - len(report.failures)
    print(f"{passed}/{len(report.checks)} checks passed")
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


INPUT_ERRORS = (ConfigError, ModeError, ProblemError, ScheduleRangeError, ShapeError, SlopeFitError)


def _exit_code(exc: BaseException) -> int | None:
    if isinstance(exc, RunError) and exc.__cause__ is not None:
        return _exit_code(exc.__cause__)
    if isinstance(exc, NonFiniteError):
        return EXIT_NON_FINITE
    if isinstance(exc, INPUT_ERRORS):
        return EXIT_CONFIG
    return None


def _where(exc: BaseException) -> str:
    if isinstance(exc, RunError) and exc.__cause__ is not None:
        return _where(exc.__cause__)
    if isinstance(exc, ConfigError) and exc.key:
        return f" [{exc.key}]"
    if isinstance(exc, NonFiniteError) and exc.step is not None:
        return f" [step {exc.step}]"
    if isinstance(exc, ScheduleRangeError):
        return f" [step {exc.t}]"
    return ""


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        match args.command:
            case "run":
                return asyncio.run(_run(args))
            case "compare":
                return asyncio.run(_compare(args))
            case "fit-slope":
                return _fit_slope(args)
            case "verify":
                return asyncio.run(_verify(args))
    except MarsMError as exc:
        code = _exit_code(exc)
        if code is None:
            raise
        print(f"mars-m: {exc}{_where(exc)}", file=sys.stderr)
        return code
    return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
