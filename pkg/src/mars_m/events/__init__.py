"""Events package for run and verification lifecycle events."""

from mars_m.events.observer import (
    CompositeObserver,
    ConsoleObserver,
    JsonlObserver,
    NullObserver,
    Observer,
    RecordingObserver,
)
from mars_m.events.types import (
    BenchEvent,
    CheckEvent,
    Event,
    RunEndEvent,
    RunStartEvent,
    StepEvent,
)

__all__ = [
    "BenchEvent",
    "CheckEvent",
    "CompositeObserver",
    "ConsoleObserver",
    "Event",
    "JsonlObserver",
    "NullObserver",
    "Observer",
    "RecordingObserver",
    "RunEndEvent",
    "RunStartEvent",
    "StepEvent",
]
