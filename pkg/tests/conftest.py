import sys
from pathlib import Path

import numpy as np
import pytest

# Make the sibling oracle module importable regardless of invocation dir.
sys.path.insert(0, str(Path(__file__).parent))

from scenereader.model import BBox, Detection, Frame, class_by_id


def make_frame(
    width: int = 640, height: int = 480, value: int = 8, seq: int = 0
) -> Frame:
    pixels = np.full((height, width, 3), value, dtype=np.uint8)
    return Frame.from_array(pixels, seq=seq)


def make_det(
    class_id: int, conf: float, x0: float, y0: float, x1: float, y1: float
) -> Detection:
    return Detection(
        cls=class_by_id(class_id), bbox=BBox(x0, y0, x1, y1), confidence=conf
    )


class FakeTime:
    """Monotonic stand-in for time.monotonic, advanced explicitly."""

    def __init__(self, start: float = 0.0) -> None:
        self.now = start

    def __call__(self) -> float:
        return self.now

    def advance(self, seconds: float) -> None:
        self.now += seconds


@pytest.fixture
def fake_time() -> FakeTime:
    return FakeTime()
