"""Monotonic time source, swappable for deterministic replay and tests."""

from __future__ import annotations

import threading
import time
from typing import Protocol, runtime_checkable


@runtime_checkable
class Clock(Protocol):
    def now_ms(self) -> float: ...

    def sleep(self, seconds: float) -> None: ...


class SystemClock:
    """Wall-clock monotonic time."""

    def now_ms(self) -> float:
        return time.monotonic() * 1000.0

    def sleep(self, seconds: float) -> None:
        time.sleep(seconds)


class VirtualClock:
    """Manually advanced time. ``sleep`` returns instantly after moving the
    clock forward, so replays of hour-long sessions finish in milliseconds
    and produce identical timestamps every run."""

    def __init__(self, start_ms: float = 0.0) -> None:
        self._now_ms = start_ms
        self._lock = threading.Lock()

    def now_ms(self) -> float:
        with self._lock:
            return self._now_ms

    def sleep(self, seconds: float) -> None:
        self.advance_ms(seconds * 1000.0)

    def advance_ms(self, delta_ms: float) -> None:
        if delta_ms < 0:
            raise ValueError("time cannot move backwards")
        with self._lock:
            self._now_ms += delta_ms
