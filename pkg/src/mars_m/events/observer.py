"""Observer protocol and implementations."""

from __future__ import annotations

import sys
from pathlib import Path
from typing import Protocol, TextIO

from mars_m.events.types import CheckEvent, Event, RunEndEvent, RunStartEvent, StepEvent


class Observer(Protocol):
    """Receives run lifecycle events with single emit method."""

    async def emit(self, event: Event) -> None: ...


class NullObserver:
    """No-op observer that discards all events."""

    async def emit(self, event: Event) -> None:
        pass


class CompositeObserver:
    """Fan out events to multiple observers."""

    def __init__(self, observers: list[Observer]) -> None:
        self._observers = observers

    async def emit(self, event: Event) -> None:
        for observer in self._observers:
            await observer.emit(event)


class ConsoleObserver:
    """Prints one line per event; step events only every ``step_every`` steps."""

    def __init__(self, stream: TextIO | None = None, step_every: int = 100) -> None:
        self._stream = stream or sys.stderr
        self._step_every = max(1, step_every)

    async def emit(self, event: Event) -> None:
        line = self.format(event)
        if line is not None:
            print(line, file=self._stream)

    def format(self, event: Event) -> str | None:
        match event:
            case RunStartEvent():
                return (
                    f"[{event.run_name} seed={event.seed}] start: {event.optimizer} "
                    f"on {event.problem}, {event.steps} steps"
                )
            case StepEvent():
                if event.step % self._step_every:
                    return None
                return (
                    f"[{event.run_name} seed={event.seed}] step {event.step}: "
                    f"loss={event.loss:.6g} |g|={event.grad_norm_fro:.4g} eta={event.eta:.4g}"
                )
            case RunEndEvent():
                return (
                    f"[{event.run_name} seed={event.seed}] done in {event.total_duration_ms} ms: "
                    f"final={event.final_loss:.6g} best={event.best_loss:.6g}"
                )
            case CheckEvent():
                status = "PASS" if event.passed else "FAIL"
                line = f"{status} {event.name}: measured={event.measured:.6g} threshold={event.threshold:.6g}"
                return f"{line} ({event.detail})" if event.detail else line
        return None


class RecordingObserver:
    """Keeps every event in memory."""

    def __init__(self) -> None:
        self.events: list[Event] = []

    async def emit(self, event: Event) -> None:
        self.events.append(event)


class JsonlObserver:
    """Appends every event to ``path`` as one ``{"event": ..., "data": ...}`` JSON line."""

    def __init__(self, path: Path) -> None:
        self.path = path
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text("", encoding="utf-8")

    async def emit(self, event: Event) -> None:
        with self.path.open("a", encoding="utf-8") as stream:
            stream.write(f'{{"event": "{type(event).__name__}", "data": {event.model_dump_json()}}}\n')
