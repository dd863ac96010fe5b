# tests/test_bench/test_mlp_comparison.py
from pathlib import Path

import pytest

from mars_m.bench import compare, load_run_config

CONFIG_DIR = Path(__file__).resolve().parents[2] / "configs"

MLP_CONFIGS = (
    "mlp_moonlight.yaml",
    "mlp_mars_m_exact.yaml",
    "mlp_mars_m_approx.yaml",
    "mlp_adamw.yaml",
)


@pytest.mark.slow
async def test_every_mlp_optimizer_halves_the_loss(tmp_path):
    configs = [load_run_config(CONFIG_DIR / name) for name in MLP_CONFIGS]
    report = await compare(configs, [0, 1, 2], out=tmp_path)

    assert len(report.rows) == len(MLP_CONFIGS)
    assert (tmp_path / "comparison.csv").exists()
    for name, runs in report.results.items():
        assert [run.seed for run in runs] == [0, 1, 2]
        for run in runs:
            initial = run.records[0].loss
            assert run.final_loss <= 0.5 * initial, (name, run.seed, initial, run.final_loss)
