"""Frame sources: image directories, video files, live cameras.

All sources yield ``Frame`` objects with sequential ``seq`` starting at 0
and timestamps taken from the supplied clock.  Unreadable inputs are
skipped with a log line rather than aborting the run; ``seq`` counts only
frames actually delivered, so downstream consumers see a gap-free
sequence.  Sources never queue: the caller is expected to publish each
frame into a latest-wins channel, so a slow pipeline drops frames instead
of growing a backlog.
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Iterator, Protocol

import cv2
import numpy as np

from .clock import Clock, SystemClock
from .model import Frame

log = logging.getLogger(__name__)

IMAGE_SUFFIXES = (".png", ".jpg", ".jpeg", ".bmp", ".webp")


class FrameSource(Protocol):
    def __iter__(self) -> Iterator[Frame]: ...

    def close(self) -> None: ...


def _stamp(clock: Clock) -> int:
    # Frame timestamps are nanoseconds; clocks deal in milliseconds.
    return int(clock.now_ms() * 1_000_000)


def _to_rgb(bgr: np.ndarray) -> np.ndarray:
    if bgr.ndim == 2:
        return cv2.cvtColor(bgr, cv2.COLOR_GRAY2RGB)
    return cv2.cvtColor(bgr, cv2.COLOR_BGR2RGB)


def list_images(directory: str | Path) -> list[Path]:
    """Image files in lexicographic order by name, the replay order."""
    root = Path(directory)
    names = [
        p for p in root.iterdir() if p.is_file() and p.suffix.lower() in IMAGE_SUFFIXES
    ]
    return sorted(names, key=lambda p: p.name)


class ImageDirSource:
    """Replays a directory of still images as a frame stream."""

    def __init__(self, directory: str | Path, *, clock: Clock | None = None) -> None:
        self.directory = Path(directory)
        self.clock = clock if clock is not None else SystemClock()
        self._paths = list_images(self.directory)
        if not self._paths:
            raise FileNotFoundError(f"no images found in {self.directory}")

    def __iter__(self) -> Iterator[Frame]:
        seq = 0
        for path in self._paths:
            bgr = cv2.imread(str(path), cv2.IMREAD_COLOR)
            if bgr is None:
                log.warning("skipping unreadable image %s", path)
                continue
            yield Frame.from_array(_to_rgb(bgr), timestamp=_stamp(self.clock), seq=seq)
            seq += 1

    def close(self) -> None:
        pass


class VideoFileSource:
    """Decodes a video file; a failed read is treated as end of stream."""

    def __init__(
        self, path: str | Path, *, clock: Clock | None = None
    ) -> None:
        self.path = Path(path)
        self.clock = clock if clock is not None else SystemClock()
        self._capture = cv2.VideoCapture(str(self.path))
        if not self._capture.isOpened():
            raise FileNotFoundError(f"cannot open video file {self.path}")

    def __iter__(self) -> Iterator[Frame]:
        seq = 0
        while True:
            ok, bgr = self._capture.read()
            if not ok or bgr is None:
                break
            yield Frame.from_array(_to_rgb(bgr), timestamp=_stamp(self.clock), seq=seq)
            seq += 1

    def close(self) -> None:
        self._capture.release()


class CameraSource:
    """Live capture.  Runs until ``close``; transient read failures are
    retried rather than ending the stream."""

    def __init__(self, device: int = 0, *, clock: Clock | None = None) -> None:
        self.device = device
        self.clock = clock if clock is not None else SystemClock()
        self._capture = cv2.VideoCapture(device)
        if not self._capture.isOpened():
            raise RuntimeError(f"cannot open camera device {device}")
        self._closed = False

    def __iter__(self) -> Iterator[Frame]:
        seq = 0
        failures = 0
        while not self._closed:
            ok, bgr = self._capture.read()
            if not ok or bgr is None:
                failures += 1
                if failures >= 30:
                    log.error("camera device %d stopped producing frames", self.device)
                    break
                self.clock.sleep(0.01)
                continue
            failures = 0
            yield Frame.from_array(_to_rgb(bgr), timestamp=_stamp(self.clock), seq=seq)
            seq += 1

    def close(self) -> None:
        self._closed = True
        self._capture.release()


def open_source(mode: str, *, path: str | None, device: int, clock: Clock | None = None) -> FrameSource:
    if mode == "image-dir":
        assert path is not None
        return ImageDirSource(path, clock=clock)
    if mode == "video-file":
        assert path is not None
        return VideoFileSource(path, clock=clock)
    if mode == "live-camera":
        return CameraSource(device, clock=clock)
    raise ValueError(f"unknown ingestion mode {mode!r}")
