# tests/test_events/test_observer.py
import io
import json

import pytest
from pydantic import ValidationError

from mars_m.events.observer import (
    CompositeObserver,
    ConsoleObserver,
    JsonlObserver,
    NullObserver,
    RecordingObserver,
)
from mars_m.events.types import (
    CheckEvent,
    Event,
    RunEndEvent,
    RunStartEvent,
    StepEvent,
)


def _start() -> RunStartEvent:
    return RunStartEvent(run_name="r", seed=0, problem="quadratic", optimizer="mars_m", steps=10)


@pytest.mark.asyncio
async def test_null_observer_emit():
    observer = NullObserver()
    # Should not raise
    await observer.emit(_start())


@pytest.mark.asyncio
async def test_observer_pattern_matching():
    received_events = []

    class TestObserver:
        async def emit(self, event: Event):
            received_events.append(event)

    observer = TestObserver()
    await observer.emit(_start())
    await observer.emit(
        StepEvent(run_name="r", seed=0, step=1, loss=1.0, grad_norm_fro=2.0, eta=0.1)
    )

    assert len(received_events) == 2
    assert isinstance(received_events[1], StepEvent)


@pytest.mark.asyncio
async def test_composite_observer_fans_out_in_order():
    first, second = RecordingObserver(), RecordingObserver()
    composite = CompositeObserver([first, second])
    event = _start()
    await composite.emit(event)
    assert first.events == [event]
    assert second.events == [event]


@pytest.mark.asyncio
async def test_jsonl_observer_writes_one_line_per_event(tmp_path):
    path = tmp_path / "events" / "run.jsonl"
    observer = JsonlObserver(path)
    step = StepEvent(run_name="r", seed=0, step=1, loss=1.0, grad_norm_fro=2.0, eta=0.1)
    await observer.emit(_start())
    await observer.emit(step)
    lines = [json.loads(line) for line in path.read_text().splitlines()]
    assert [line["event"] for line in lines] == ["RunStartEvent", "StepEvent"]
    assert StepEvent.model_validate(lines[1]["data"]) == step


def test_events_are_frozen():
    event = _start()
    with pytest.raises(ValidationError):
        event.steps = 5  # type: ignore[misc]


def test_events_reject_unknown_fields():
    with pytest.raises(ValidationError):
        RunEndEvent(
            run_name="r",
            seed=0,
            steps=1,
            final_loss=0.0,
            best_loss=0.0,
            total_duration_ms=1,
            extra=1,
        )


@pytest.mark.asyncio
async def test_console_observer_writes_check_lines():
    stream = io.StringIO()
    observer = ConsoleObserver(stream=stream)
    await observer.emit(CheckEvent(name="clip_contract", passed=True, measured=1.0, threshold=1.0))
    await observer.emit(
        CheckEvent(name="update_rms", passed=False, measured=0.1, threshold=0.15, detail="max 0.2")
    )
    lines = stream.getvalue().splitlines()
    assert lines[0].startswith("PASS clip_contract")
    assert lines[1].startswith("FAIL update_rms")
    assert lines[1].endswith("(max 0.2)")


def test_console_observer_thins_step_events():
    observer = ConsoleObserver(stream=io.StringIO(), step_every=10)
    quiet = StepEvent(run_name="r", seed=0, step=7, loss=1.0, grad_norm_fro=1.0, eta=0.1)
    loud = StepEvent(run_name="r", seed=0, step=20, loss=1.0, grad_norm_fro=1.0, eta=0.1)
    assert observer.format(quiet) is None
    assert "step 20" in observer.format(loud)
