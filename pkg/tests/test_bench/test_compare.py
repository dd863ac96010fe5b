# tests/test_bench/test_compare.py
import pytest

from mars_m.bench import compare
from mars_m.exceptions import ConfigError, NonFiniteError, RunError

MLP = {"name": "mlp", "input_dim": 6, "hidden": 8, "classes": 3, "dataset_size": 128, "batch": 16}
LR = {"kind": "constant", "lr": 0.02}


async def test_two_configs_three_seeds(run_config, tmp_path):
    moonlight = run_config(run={"name": "moonlight", "steps": 20}, problem=MLP, optimizer={"name": "moonlight", "lr": LR})
    mars = run_config(run={"name": "mars_m", "steps": 20}, problem=MLP, optimizer={"name": "mars_m", "gamma": 0.025, "lr": LR})
    report = await compare([moonlight, mars], [0, 1, 2], out=tmp_path)
    assert len(report.rows) == 2
    assert sorted(row.rank for row in report.rows) == [1, 2]
    assert all(row.seeds == [0, 1, 2] for row in report.rows)
    assert report.rows[0].final_loss_mean <= report.rows[1].final_loss_mean
    assert report.csv_path == tmp_path / "comparison.csv"
    assert len(report.csv_path.read_text().splitlines()) == 3
    assert (tmp_path / "mars_m_seed2.csv").exists()
    assert "moonlight" in report.table()


async def test_duplicate_config_gives_identical_rows(run_config, tmp_path):
    a = run_config(run={"name": "a", "steps": 15})
    b = run_config(run={"name": "b", "steps": 15})
    report = await compare([a, b], [0, 1], out=tmp_path)
    first, second = report.rows
    assert first.final_loss_mean == second.final_loss_mean
    assert first.final_loss_std == second.final_loss_std
    assert first.tail_grad_norm_mean == second.tail_grad_norm_mean
    # ties keep input order
    assert [row.run_name for row in report.rows] == ["a", "b"]


async def test_gamma_zero_collapses_to_clipped_ema(run_config):
    shared = {"beta": 0.9, "lr": LR, "weight_decay": 0.1, "clip_threshold": 1.0}
    mars = run_config(run={"name": "mars_m", "steps": 60}, optimizer={"name": "mars_m", "gamma": 0.0, **shared})
    ema = run_config(run={"name": "ema", "steps": 60}, optimizer={"name": "moonlight", "momentum": "clipped_ema", **shared})
    report = await compare([mars, ema], [0, 1, 2], write_files=False)
    for seed_index in range(3):
        a = report.results["mars_m"][seed_index].final_loss
        b = report.results["ema"][seed_index].final_loss
        assert abs(a - b) <= 1e-10
    assert report.csv_path is None


async def test_argument_errors(run_config):
    a = run_config(run={"name": "a", "steps": 5})
    with pytest.raises(ConfigError):
        await compare([a], [0])
    with pytest.raises(ConfigError):
        await compare([a, run_config(run={"name": "b", "steps": 5})], [])
    with pytest.raises(ConfigError):
        await compare([a, a], [0])


async def test_failed_run_is_named(run_config):
    good = run_config(run={"name": "good", "steps": 5})
    bad = run_config(run={"name": "bad", "steps": 5}, optimizer={"name": "muon", "lr": {"kind": "constant", "lr": 1e200}})
    with pytest.raises(RunError) as exc_info:
        await compare([good, bad], [4], write_files=False)
    assert exc_info.value.run_name == "bad"
    assert exc_info.value.seed == 4
    assert isinstance(exc_info.value.__cause__, NonFiniteError)
