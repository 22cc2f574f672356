"""Fuse detections with depth into cue geometry: pan, gain, sweep order.

All functions are pure over immutable inputs. The pan law maps bbox center
x linearly into the horizontal field of view; the gain law is linear in
(1 - depth) with a floor so far objects stay audible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from . import _kernels
from .model import BBox, DepthMap, Detection, PointerRay, SpatialCue, bbox_center

_HALF_AREA_SCALE = math.sqrt(0.5)


@dataclass(frozen=True, slots=True)
class SpatialConfig:
    horizontal_fov: float = 1.745  # radians, ~100 deg
    min_gain: float = 0.15
    gain_exponent: float = 1.0
    sweep_gap_ms: int = 350
    aim_radius: float = 80.0

    def __post_init__(self) -> None:
        if not 0.0 < self.horizontal_fov <= math.pi:
            raise ValueError(f"horizontal_fov {self.horizontal_fov} outside (0, pi]")
        if not 0.0 <= self.min_gain < 1.0:
            raise ValueError(f"min_gain {self.min_gain} outside [0, 1)")
        if self.sweep_gap_ms < 0:
            raise ValueError("sweep_gap_ms must be >= 0")
        if self.aim_radius <= 0:
            raise ValueError("aim_radius must be positive")


class CueGeometry(NamedTuple):
    azimuth: float
    distance: float
    gain: float


def _subbox_pixels(dm: DepthMap, b: BBox) -> tuple[int, int, int, int]:
    """Inclusive pixel rectangle for the central half-area sub-box of ``b``.

    The sub-box shrinks both sides by sqrt(0.5) about the box center; a
    pixel is included when its unit cell overlaps the sub-box. Point boxes
    resolve to the single pixel under them.
    """
    cx, cy = bbox_center(b)
    half_w = b.width * _HALF_AREA_SCALE / 2.0
    half_h = b.height * _HALF_AREA_SCALE / 2.0
    x0 = math.floor(cx - half_w)
    x1 = math.ceil(cx + half_w) - 1
    y0 = math.floor(cy - half_h)
    y1 = math.ceil(cy + half_h) - 1
    if x1 < x0:
        x1 = x0
    if y1 < y0:
        y1 = y0
    x0 = min(max(x0, 0), dm.width - 1)
    x1 = min(max(x1, 0), dm.width - 1)
    y0 = min(max(y0, 0), dm.height - 1)
    y1 = min(max(y1, 0), dm.height - 1)
    return x0, y0, x1, y1


def sample_depth(dm: DepthMap, b: BBox) -> float:
    """Median depth inside the central half-area sub-box of ``b``.

    The median is robust against background pixels that leak into the
    outer parts of a detection box.
    """
    x0, y0, x1, y1 = _subbox_pixels(dm, b)
    return float(_kernels.box_median(dm.values, x0, y0, x1, y1))


def to_spatial(b: BBox, depth: float, frame_w: float, cfg: SpatialConfig) -> CueGeometry:
    """Pan/gain geometry for a box at the given normalized depth."""
    if not 0.0 <= depth <= 1.0:
        raise ValueError(f"depth {depth} outside [0, 1]")
    cx, _ = bbox_center(b)
    azimuth = (cx / frame_w - 0.5) * cfg.horizontal_fov
    gain = cfg.min_gain + (1.0 - cfg.min_gain) * (1.0 - depth) ** cfg.gain_exponent
    return CueGeometry(azimuth=azimuth, distance=depth, gain=gain)


def order_sweep(dets: Sequence[Detection]) -> list[Detection]:
    """Left-to-right reading order: center x, then center y, then class id."""

    def key(d: Detection) -> tuple[float, float, int]:
        cx, cy = bbox_center(d.bbox)
        return (cx, cy, d.cls.id)

    return sorted(dets, key=key)


def schedule_sweep(
    cues: Sequence[SpatialCue],
    clip_durations_ms: Sequence[int],
    cfg: SpatialConfig,
) -> list[tuple[int, SpatialCue]]:
    """Assign playback start times: each cue follows the previous one plus
    the configured gap, so the timeline never overlaps."""
    if len(cues) != len(clip_durations_ms):
        raise ValueError("one clip duration required per cue")
    timeline: list[tuple[int, SpatialCue]] = []
    start = 0
    for i, cue in enumerate(cues):
        timeline.append((start, cue))
        start += int(clip_durations_ms[i]) + cfg.sweep_gap_ms
    return timeline


def _clamp_point_distance(b: BBox, px: float, py: float) -> float:
    qx = min(max(px, b.x_min), b.x_max)
    qy = min(max(py, b.y_min), b.y_max)
    return math.hypot(px - qx, py - qy)


def near_pointer(
    dets: Sequence[Detection], ray: PointerRay, cfg: SpatialConfig
) -> list[Detection]:
    """Detections whose box touches the aim disc around ``ray.end``,
    nearest center first. The order is total, so the result is invariant
    under input permutation."""
    ex, ey = ray.end
    hits = [
        d
        for d in dets
        if _clamp_point_distance(d.bbox, ex, ey) <= cfg.aim_radius
    ]

    def key(d: Detection) -> tuple:
        cx, cy = bbox_center(d.bbox)
        return (
            math.hypot(cx - ex, cy - ey),
            d.cls.id,
            d.bbox.x_min,
            d.bbox.y_min,
            d.bbox.x_max,
            d.bbox.y_max,
            -d.confidence,
        )

    return sorted(hits, key=key)
