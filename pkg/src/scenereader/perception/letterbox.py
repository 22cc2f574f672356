"""Letterbox resize to the model's square input, preserving aspect ratio.

Detections computed in letterboxed space are mapped back so all engine
coordinates stay in the original frame space.
"""

from __future__ import annotations

from dataclasses import dataclass

import cv2
import numpy as np

from ..model import BBox, Frame

MODEL_INPUT_SIZE = 640
_PAD_GRAY = 114


@dataclass(frozen=True, slots=True)
class LetterboxTransform:
    scale: float
    pad_x: float
    pad_y: float
    target: int


def letterbox_transform(width: int, height: int, target: int = MODEL_INPUT_SIZE) -> LetterboxTransform:
    """The transform a frame of this size would get, without touching pixels."""
    if width == target and height == target:
        return LetterboxTransform(1.0, 0.0, 0.0, target)
    scale = min(target / width, target / height)
    new_w = max(1, round(width * scale))
    new_h = max(1, round(height * scale))
    pad_x = (target - new_w) // 2
    pad_y = (target - new_h) // 2
    return LetterboxTransform(scale, float(pad_x), float(pad_y), target)


def letterbox(frame: Frame, target: int = MODEL_INPUT_SIZE) -> tuple[Frame, LetterboxTransform]:
    t = letterbox_transform(frame.width, frame.height, target)
    if t.scale == 1.0 and t.pad_x == 0.0 and t.pad_y == 0.0 and frame.width == target and frame.height == target:
        return frame, t
    new_w = max(1, round(frame.width * t.scale))
    new_h = max(1, round(frame.height * t.scale))
    resized = cv2.resize(frame.pixels, (new_w, new_h), interpolation=cv2.INTER_LINEAR)
    canvas = np.full((target, target, 3), _PAD_GRAY, dtype=np.uint8)
    px, py = int(t.pad_x), int(t.pad_y)
    canvas[py : py + new_h, px : px + new_w] = resized
    boxed = Frame.from_array(canvas, timestamp=frame.timestamp, seq=frame.seq)
    return boxed, t


def bbox_to_original(b: BBox, t: LetterboxTransform, frame_w: float, frame_h: float) -> BBox:
    """Map a box from letterboxed space back to original frame space."""
    return BBox(
        (b.x_min - t.pad_x) / t.scale,
        (b.y_min - t.pad_y) / t.scale,
        (b.x_max - t.pad_x) / t.scale,
        (b.y_max - t.pad_y) / t.scale,
    ).clamped(frame_w, frame_h)
