# tests/test_bench/test_cli.py
import json

import pytest
import yaml

from mars_m.bench.cli import (
    EXIT_CONFIG,
    EXIT_NON_FINITE,
    EXIT_OK,
    EXIT_VERIFY_FAILED,
    _exit_code,
    build_parser,
    main,
)
from mars_m.exceptions import ProblemError, RunError, ScheduleRangeError


def write_config(tmp_path, name="cli", **overrides):
    data = {
        "run": {"name": name, "steps": 12, "seed": 0, "out": str(tmp_path / "runs")},
        "problem": {"name": "quadratic", "m": 4, "n": 3, "sigma": 0.2},
        "optimizer": {"name": "mars_m", "lr": {"kind": "constant", "lr": 0.02}},
    }
    data.update(overrides)
    path = tmp_path / f"{name}.yaml"
    path.write_text(yaml.safe_dump(data))
    return path


def test_run(tmp_path, capsys):
    code = main(["run", "--config", str(write_config(tmp_path)), "--seed", "5", "--quiet"])
    assert code == EXIT_OK
    csv = tmp_path / "runs" / "cli_seed5.csv"
    assert csv.exists()
    assert str(csv) in capsys.readouterr().out


def test_run_out_override(tmp_path):
    code = main(["run", "--config", str(write_config(tmp_path)), "--out", str(tmp_path / "elsewhere"), "--quiet"])
    assert code == EXIT_OK
    assert (tmp_path / "elsewhere" / "cli_seed0.summary.txt").exists()


def test_run_writes_events(tmp_path):
    events = tmp_path / "events.jsonl"
    code = main(["run", "--config", str(write_config(tmp_path)), "--quiet", "--events", str(events)])
    assert code == EXIT_OK
    kinds = [json.loads(line)["event"] for line in events.read_text().splitlines()]
    assert kinds[0] == "RunStartEvent"
    assert kinds[-1] == "RunEndEvent"
    assert "StepEvent" in kinds


def test_run_unknown_key(tmp_path, capsys):
    path = write_config(tmp_path, optimizer={"name": "mars_m", "gama": 0.1})
    assert main(["run", "--config", str(path)]) == EXIT_CONFIG
    assert "[optimizer.gama]" in capsys.readouterr().err


def test_run_batch_larger_than_dataset(tmp_path, capsys):
    problem = {"name": "mlp", "input_dim": 4, "hidden": 5, "dataset_size": 32, "batch": 64}
    path = write_config(tmp_path, problem=problem)
    assert main(["run", "--config", str(path), "--quiet"]) == EXIT_CONFIG
    assert "[problem.batch]" in capsys.readouterr().err


@pytest.mark.parametrize(
    ("overrides", "key"),
    [
        (
            {
                "optimizer": {
                    "name": "mars_m",
                    "lr": {"kind": "constant", "lr": 0.02},
                    "gamma_schedule": {"kind": "cosine_warmup", "max_lr": 0.025, "total_steps": 2},
                }
            },
            "optimizer.gamma_schedule.total_steps",
        ),
        (
            {"vector_optimizer": {"name": "adamw", "lr": {"kind": "cosine_warmup", "max_lr": 0.01, "total_steps": 5}}},
            "vector_optimizer.lr.total_steps",
        ),
    ],
)
def test_run_schedule_shorter_than_run(tmp_path, capsys, overrides, key):
    path = write_config(tmp_path, **overrides)
    assert main(["run", "--config", str(path), "--quiet"]) == EXIT_CONFIG
    assert f"[{key}]" in capsys.readouterr().err


def test_wrapped_input_errors_map_to_config_exit():
    for cause in (ScheduleRangeError("step 3 is past total_steps=2", t=3), ProblemError("bad batch")):
        wrapped = RunError("run failed", run_name="cli", seed=0)
        wrapped.__cause__ = cause
        assert _exit_code(cause) == EXIT_CONFIG
        assert _exit_code(wrapped) == EXIT_CONFIG


def test_run_missing_file(tmp_path):
    assert main(["run", "--config", str(tmp_path / "absent.yaml")]) == EXIT_CONFIG


def test_run_diverges(tmp_path, capsys):
    path = write_config(tmp_path, optimizer={"name": "muon", "lr": {"kind": "constant", "lr": 1e200}})
    assert main(["run", "--config", str(path), "--quiet"]) == EXIT_NON_FINITE
    assert "[step 1]" in capsys.readouterr().err


def test_compare(tmp_path, capsys):
    a = write_config(tmp_path, name="a")
    b = write_config(tmp_path, name="b", optimizer={"name": "moonlight"})
    code = main(["compare", "--config", str(a), str(b), "--seeds", "0", "1", "--out", str(tmp_path / "cmp"), "--quiet"])
    assert code == EXIT_OK
    assert (tmp_path / "cmp" / "comparison.csv").exists()
    out = capsys.readouterr().out
    assert "rank" in out


def test_compare_divergent_run_exits_non_finite(tmp_path):
    a = write_config(tmp_path, name="a")
    b = write_config(tmp_path, name="b", optimizer={"name": "muon", "lr": {"kind": "constant", "lr": 1e200}})
    assert main(["compare", "--config", str(a), str(b), "--seeds", "0", "--quiet"]) == EXIT_NON_FINITE


def test_fit_slope(tmp_path, capsys):
    main(["run", "--config", str(write_config(tmp_path, run={"name": "s", "steps": 200, "out": str(tmp_path)})), "--quiet"])
    capsys.readouterr()
    assert main(["fit-slope", str(tmp_path / "s_seed0.csv"), "--column", "true_grad_norm"]) == EXIT_OK
    float(capsys.readouterr().out)


def test_fit_slope_unknown_column(tmp_path):
    path = tmp_path / "m.csv"
    path.write_text("step,loss\n1,1.0\n")
    assert main(["fit-slope", str(path), "--column", "eta"]) == EXIT_CONFIG


def test_fit_slope_strided_run(tmp_path, capsys):
    run = {"name": "s", "steps": 200, "stride": 2, "out": str(tmp_path)}
    main(["run", "--config", str(write_config(tmp_path, run=run)), "--quiet"])
    csv = str(tmp_path / "s_seed0.csv")
    assert main(["fit-slope", csv]) == EXIT_CONFIG
    assert "--raw" in capsys.readouterr().err
    assert main(["fit-slope", csv, "--raw"]) == EXIT_OK


def test_verify_fault_injection(capsys):
    assert main(["verify", "--ns-quintic-steps", "1", "--quiet"]) == EXIT_VERIFY_FAILED
    out = capsys.readouterr().out
    assert "FAIL polar_quintic_range" in out


@pytest.mark.slow
def test_verify_passes(capsys):
    assert main(["verify"]) == EXIT_OK
    assert "PASS clip_contract" in capsys.readouterr().out


def test_parser_requires_command():
    with pytest.raises(SystemExit):
        build_parser().parse_args([])
