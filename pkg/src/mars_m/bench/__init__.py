"""Benchmark harness: run files, trainer loop, comparisons, slopes and verification."""

from mars_m.bench.compare import ComparisonReport, compare, summarize
from mars_m.bench.config import RunConfig, RunSection, load_run_config, parse_run_config
from mars_m.bench.records import format_csv, read_column, write_csv, write_summary
from mars_m.bench.slope import fit_slope, fit_slope_arrays, running_average
from mars_m.bench.trainer import Trainer, run
from mars_m.bench.verify import CHECKS, VerifySettings, verify

__all__ = [
    "CHECKS",
    "ComparisonReport",
    "RunConfig",
    "RunSection",
    "Trainer",
    "VerifySettings",
    "compare",
    "fit_slope",
    "fit_slope_arrays",
    "format_csv",
    "load_run_config",
    "parse_run_config",
    "read_column",
    "run",
    "running_average",
    "summarize",
    "verify",
    "write_csv",
    "write_summary",
]
