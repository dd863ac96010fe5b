"""Tests for public API surface."""


def test_all_exports_importable() -> None:
    """Verify all __all__ exports are importable."""
    import mars_m

    for name in mars_m.__all__:
        obj = getattr(mars_m, name)
        assert obj is not None, f"Export {name} is None"


def test_version_exists() -> None:
    import mars_m

    assert isinstance(mars_m.__version__, str)
    assert mars_m.__version__ == "0.1.0"


def test_optimizer_steps_importable() -> None:
    from mars_m import (
        adamw_step,
        adjusted_recurrence_step,
        approximate_momentum_step,
        clip_fro,
        mars_m_step,
        moonlight_reformulated_step,
        moonlight_step,
        muon_step,
    )

    assert mars_m_step.__name__ == "mars_m_step"
    assert muon_step.__name__ == "muon_step"
    assert moonlight_step.__name__ == "moonlight_step"
    assert adamw_step.__name__ == "adamw_step"
    assert clip_fro.__name__ == "clip_fro"
    assert adjusted_recurrence_step.__name__ == "adjusted_recurrence_step"
    assert approximate_momentum_step.__name__ == "approximate_momentum_step"
    assert moonlight_reformulated_step.__name__ == "moonlight_reformulated_step"


def test_events_importable() -> None:
    from mars_m import (
        BenchEvent,
        CheckEvent,
        CompositeObserver,
        ConsoleObserver,
        JsonlObserver,
        NullObserver,
        RunEndEvent,
        RunStartEvent,
        StepEvent,
    )

    assert BenchEvent.__name__ == "BenchEvent"
    assert issubclass(RunStartEvent, BenchEvent)
    assert issubclass(CheckEvent, BenchEvent)


def test_exceptions_share_base() -> None:
    from mars_m import (
        ConfigError,
        ConvergenceError,
        DegenerateInputError,
        MarsMError,
        ModeError,
        NonFiniteError,
        ProblemError,
        RunError,
        ScheduleRangeError,
        ShapeError,
        SlopeFitError,
    )

    for exc in (
        ConfigError,
        ConvergenceError,
        DegenerateInputError,
        ModeError,
        NonFiniteError,
        ProblemError,
        RunError,
        ScheduleRangeError,
        ShapeError,
        SlopeFitError,
    ):
        assert issubclass(exc, MarsMError)


def test_subpackages_expose_all() -> None:
    import mars_m.bench
    import mars_m.events
    import mars_m.linalg
    import mars_m.optim
    import mars_m.polar
    import mars_m.problems

    for module in (
        mars_m.bench,
        mars_m.events,
        mars_m.linalg,
        mars_m.optim,
        mars_m.polar,
        mars_m.problems,
    ):
        for name in module.__all__:
            assert getattr(module, name) is not None, f"{module.__name__}.{name}"
