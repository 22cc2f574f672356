"""Canonical domain types shared across the engine.

Geometry, the 30-class VR object taxonomy, depth maps, tones, and spatial
cues. Everything here is immutable after construction and safe to hand
between worker threads.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Union

import numpy as np


@dataclass(frozen=True, slots=True)
class Frame:
    """One captured RGB frame, the pipeline's unit of work.

    ``pixels`` is a read-only (height, width, 3) uint8 array. ``timestamp``
    is monotonic nanoseconds; ``seq`` strictly increases per source.
    """

    pixels: np.ndarray
    width: int
    height: int
    timestamp: int
    seq: int

    def __post_init__(self) -> None:
        if self.width <= 0 or self.height <= 0:
            raise ValueError("frame dimensions must be positive")
        if self.pixels.shape != (self.height, self.width, 3):
            raise ValueError(
                f"pixel buffer shape {self.pixels.shape} does not match "
                f"{self.height}x{self.width}x3"
            )
        if self.pixels.dtype != np.uint8:
            raise ValueError("pixel buffer must be uint8")
        self.pixels.setflags(write=False)

    @classmethod
    def from_array(cls, pixels: np.ndarray, timestamp: int = 0, seq: int = 0) -> Frame:
        pixels = np.ascontiguousarray(pixels, dtype=np.uint8)
        h, w = pixels.shape[:2]
        return cls(pixels=pixels, width=w, height=h, timestamp=timestamp, seq=seq)


@dataclass(frozen=True, slots=True)
class BBox:
    """Axis-aligned box in frame coordinates, origin top-left.

    Unordered corners are normalized so ``x_min <= x_max`` and
    ``y_min <= y_max``. Zero-area boxes are legal and treated as points.
    """

    x_min: float
    y_min: float
    x_max: float
    y_max: float

    def __post_init__(self) -> None:
        x0, x1 = float(self.x_min), float(self.x_max)
        y0, y1 = float(self.y_min), float(self.y_max)
        if x0 > x1:
            x0, x1 = x1, x0
        if y0 > y1:
            y0, y1 = y1, y0
        object.__setattr__(self, "x_min", x0)
        object.__setattr__(self, "x_max", x1)
        object.__setattr__(self, "y_min", y0)
        object.__setattr__(self, "y_max", y1)

    @classmethod
    def from_corners(cls, x0: float, y0: float, x1: float, y1: float) -> BBox:
        return cls(x0, y0, x1, y1)

    def clamped(self, frame_w: float, frame_h: float) -> BBox:
        return BBox(
            min(max(self.x_min, 0.0), frame_w),
            min(max(self.y_min, 0.0), frame_h),
            min(max(self.x_max, 0.0), frame_w),
            min(max(self.y_max, 0.0), frame_h),
        )

    @property
    def width(self) -> float:
        return self.x_max - self.x_min

    @property
    def height(self) -> float:
        return self.y_max - self.y_min

    @property
    def area(self) -> float:
        return self.width * self.height

    def intersects(self, other: BBox) -> bool:
        return (
            self.x_min <= other.x_max
            and other.x_min <= self.x_max
            and self.y_min <= other.y_max
            and other.y_min <= self.y_max
        )


def bbox_center(b: BBox) -> tuple[float, float]:
    """Midpoint of a box; a point box is its own center."""
    return ((b.x_min + b.x_max) / 2.0, (b.y_min + b.y_max) / 2.0)


class Category(enum.Enum):
    AVATARS = "Avatars"
    INFORMATIONAL = "Informational"
    INTERACTABLES = "Interactables"
    SAFETY = "Safety"
    SEATING_AREAS = "SeatingAreas"
    VR_SYSTEM = "VRSystem"


@dataclass(frozen=True, slots=True)
class ObjectClass:
    id: int
    name: str
    category: Category


# The 30 detectable VR object classes, grouped by category. Ids follow the
# within-group listing order, groups in fixed category order, so they are
# stable across runs.
_TAXONOMY_GROUPS: tuple[tuple[Category, tuple[str, ...]], ...] = (
    (Category.AVATARS, ("avatar", "avatar-nonhuman", "chat bubble", "chat box")),
    (
        Category.INFORMATIONAL,
        (
            "sign-text",
            "ui-text",
            "sign-graphic",
            "menu",
            "ui-graphic",
            "progress bar",
            "hud",
            "indicator-mute",
        ),
    ),
    (
        Category.INTERACTABLES,
        (
            "interactable",
            "button",
            "target",
            "portal",
            "writing utensil",
            "watch",
            "writing surface",
            "spawner",
        ),
    ),
    (Category.SAFETY, ("guardian", "out of bounds")),
    (Category.SEATING_AREAS, ("seat-single", "table", "seat-multiple", "campfire")),
    (
        Category.VR_SYSTEM,
        ("hand", "controller", "dashboard", "locomotion-target"),
    ),
)

_TAXONOMY: tuple[ObjectClass, ...] = tuple(
    ObjectClass(id=i, name=name, category=cat)
    for i, (cat, name) in enumerate(
        (cat, name) for cat, names in _TAXONOMY_GROUPS for name in names
    )
)

_BY_NAME = {c.name: c for c in _TAXONOMY}


def taxonomy() -> list[ObjectClass]:
    """The 30 object classes with stable ids, in taxonomy order."""
    return list(_TAXONOMY)


def class_by_id(class_id: int) -> ObjectClass:
    if not 0 <= class_id < len(_TAXONOMY):
        raise KeyError(f"unknown class id {class_id}")
    return _TAXONOMY[class_id]


def class_by_name(name: str) -> ObjectClass:
    try:
        return _BY_NAME[name]
    except KeyError:
        raise KeyError(f"unknown class name {name!r}") from None


@dataclass(frozen=True, slots=True)
class Detection:
    cls: ObjectClass
    bbox: BBox
    confidence: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.confidence <= 1.0:
            raise ValueError(f"confidence {self.confidence} outside [0, 1]")


@dataclass(frozen=True, slots=True)
class DepthMap:
    """Per-pixel relative depth aligned to a frame: 0 = nearest, 1 = farthest."""

    values: np.ndarray

    def __post_init__(self) -> None:
        if self.values.ndim != 2:
            raise ValueError("depth values must be a 2-D array")
        if self.values.dtype != np.float32:
            raise ValueError("depth values must be float32")
        vmin = float(self.values.min(initial=0.0))
        vmax = float(self.values.max(initial=0.0))
        if vmin < 0.0 or vmax > 1.0:
            raise ValueError(f"depth values outside [0, 1]: [{vmin}, {vmax}]")
        self.values.setflags(write=False)

    @property
    def width(self) -> int:
        return self.values.shape[1]

    @property
    def height(self) -> int:
        return self.values.shape[0]

    @classmethod
    def from_array(cls, values: np.ndarray) -> DepthMap:
        return cls(np.ascontiguousarray(values, dtype=np.float32))


class SceneTone(enum.Enum):
    NEUTRAL = "neutral"
    CHEERFUL = "cheerful"
    SAD = "sad"
    FEARFUL = "fearful"
    URGENT = "urgent"


DEFAULT_TONE = SceneTone.NEUTRAL


@dataclass(frozen=True, slots=True)
class Speech:
    text: str


@dataclass(frozen=True, slots=True)
class Effect:
    effect_id: str


CuePayload = Union[Speech, Effect]


@dataclass(frozen=True, slots=True)
class SpatialCue:
    """A placed utterance or sound effect, ready for transport.

    ``azimuth`` is radians in [-pi/2, +pi/2], negative left. ``gain`` and
    ``distance`` are normalized; ``order_index`` is the playback rank
    within a batch.
    """

    azimuth: float
    gain: float
    distance: float
    payload: CuePayload
    tone: SceneTone = DEFAULT_TONE
    order_index: int = 0

    def __post_init__(self) -> None:
        half_pi = np.pi / 2
        if not -half_pi <= self.azimuth <= half_pi:
            raise ValueError(f"azimuth {self.azimuth} outside [-pi/2, pi/2]")
        if not 0.0 <= self.gain <= 1.0:
            raise ValueError(f"gain {self.gain} outside [0, 1]")
        if not 0.0 <= self.distance <= 1.0:
            raise ValueError(f"distance {self.distance} outside [0, 1]")


@dataclass(frozen=True, slots=True)
class PointerRay:
    """Fitted laser-pointer segment; ``end`` is the far (aim) endpoint."""

    start: tuple[float, float]
    end: tuple[float, float]
    confidence: float

    def __post_init__(self) -> None:
        if self.start == self.end:
            raise ValueError("pointer ray must have distinct endpoints")
        if not 0.0 <= self.confidence <= 1.0:
            raise ValueError(f"confidence {self.confidence} outside [0, 1]")
