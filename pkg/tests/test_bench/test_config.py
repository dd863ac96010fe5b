# tests/test_bench/test_config.py
from pathlib import Path

import pytest

from mars_m.bench import load_run_config, parse_run_config
from mars_m.bench.config import schedules
from mars_m.exceptions import ConfigError
from mars_m.optim import MarsMConfig, TheorySchedule

CONFIG_DIR = Path(__file__).resolve().parents[2] / "configs"


def base(**sections):
    data = {
        "run": {"name": "t", "steps": 10},
        "problem": {"name": "quadratic"},
        "optimizer": {"name": "mars_m"},
    }
    data.update(sections)
    return data


@pytest.mark.parametrize("path", sorted(CONFIG_DIR.rglob("*.yaml")), ids=lambda p: p.name)
def test_canned_configs_load(path):
    config = load_run_config(path)
    assert config.run.steps >= 1


def test_theory_config():
    config = load_run_config(CONFIG_DIR / "theory.yaml")
    assert isinstance(config.optimizer, MarsMConfig)
    assert config.optimizer.mode == "exact"
    assert config.optimizer.lr == TheorySchedule(s=4)
    assert config.run.steps == 10_000


@pytest.mark.parametrize(
    ("sections", "key"),
    [
        ({"optimizer": {"name": "mars_m", "betta": 0.9}}, "optimizer.betta"),
        ({"optimizer": {"name": "mars_m", "lr": {"kind": "linear"}}}, "optimizer.lr.kind"),
        ({"problem": {"name": "rosenbrock"}}, "problem.name"),
        ({"run": {"name": "t"}}, "run.steps"),
        ({"run": {"name": "t", "steps": 10, "colour": "red"}}, "run.colour"),
        ({"optimizer": {"name": "mars_m", "beta": 1.5}}, "optimizer.beta"),
    ],
)
def test_bad_keys_are_named(sections, key):
    with pytest.raises(ConfigError) as exc_info:
        parse_run_config(base(**sections))
    assert exc_info.value.key == key


def test_cosine_must_cover_the_run():
    lr = {"kind": "cosine_warmup", "max_lr": 0.01, "warmup_steps": 1, "total_steps": 5}
    with pytest.raises(ConfigError) as exc_info:
        parse_run_config(base(optimizer={"name": "moonlight", "lr": lr}))
    assert exc_info.value.key == "optimizer.lr.total_steps"


def test_unknown_problem_lists_the_known_ones():
    with pytest.raises(ConfigError, match="quadratic, lowrank, mlp"):
        parse_run_config(base(problem={"name": "rosenbrock"}))


def test_every_schedule_is_listed():
    cosine = {"kind": "cosine_warmup", "max_lr": 0.01, "total_steps": 10}
    config = parse_run_config(
        base(
            optimizer={"name": "mars_m", "gamma_schedule": cosine},
            vector_optimizer={"name": "adamw", "lr": cosine},
        )
    )
    assert [key for key, _ in schedules(config)] == [
        "optimizer.lr",
        "optimizer.gamma_schedule",
        "vector_optimizer.lr",
    ]


def test_not_a_mapping():
    with pytest.raises(ConfigError):
        parse_run_config(["run"])


def test_missing_file(tmp_path):
    with pytest.raises(ConfigError):
        load_run_config(tmp_path / "nope.yaml")


def test_invalid_yaml(tmp_path):
    path = tmp_path / "bad.yaml"
    path.write_text("run: [unclosed\n")
    with pytest.raises(ConfigError):
        load_run_config(path)


def test_with_run_overrides(tmp_path):
    config = parse_run_config(base())
    moved = config.with_run(seed=3, out=tmp_path)
    assert moved.run.seed == 3
    assert moved.csv_path() == tmp_path / "t_seed3.csv"
    assert moved.summary_path() == tmp_path / "t_seed3.summary.txt"
    assert config.with_run(seed=None, out=None) is config
