"""Detector and depth backend contracts plus deterministic fixtures.

Fixture backends are pure functions of (scene, seq): they replay scripted
detections and depth maps from an annotation file, giving tests and the
replay mode byte-identical behavior run over run.

Annotation file format (one file per scene, ``#`` comments allowed):

    seq class_id conf x_min y_min x_max y_max    detection record
    seq constant <v>                             depth: constant field
    seq gradient <x|y>                           depth: linear ramp
    seq file <path.pgm>                          depth: image, min/max normalized
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Protocol, runtime_checkable

import cv2
import numpy as np

from ..model import BBox, DepthMap, Detection, Frame, class_by_id

DEFAULT_CONF_THRESHOLD = 0.25


class BackendUnavailable(Exception):
    """A model backend failed to load or respond; callers degrade."""


@runtime_checkable
class DetectorBackend(Protocol):
    conf_threshold: float

    def detect(self, frame: Frame) -> list[Detection]: ...


@runtime_checkable
class DepthBackend(Protocol):
    def estimate_depth(self, frame: Frame) -> DepthMap: ...


@dataclass(frozen=True, slots=True)
class DepthScript:
    kind: str  # constant | gradient | file
    value: float = 0.0
    axis: str = "x"
    path: Path | None = None


@dataclass(slots=True)
class FixtureScene:
    """Scripted stand-in for model backends: per-seq detections and depth."""

    name: str
    detections: dict[int, list[Detection]] = field(default_factory=dict)
    depth_scripts: dict[int, DepthScript] = field(default_factory=dict)


def parse_annotation_file(path: str | Path, name: str | None = None) -> FixtureScene:
    path = Path(path)
    scene = FixtureScene(name=name or path.stem)
    for lineno, raw in enumerate(path.read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            _parse_annotation_line(line, scene, base_dir=path.parent)
        except (ValueError, KeyError) as exc:
            raise ValueError(f"{path}:{lineno}: {exc}") from exc
    return scene


def parse_record(line: str, base_dir: Path) -> tuple[int, Detection | DepthScript]:
    """One annotation record: either a 7-field detection or a depth script."""
    fields = line.split()
    seq = int(fields[0])
    if len(fields) >= 2 and fields[1] in ("constant", "gradient", "file"):
        kind = fields[1]
        if kind == "constant":
            return seq, DepthScript(kind=kind, value=float(fields[2]))
        if kind == "gradient":
            axis = fields[2]
            if axis not in ("x", "y"):
                raise ValueError(f"gradient axis must be x or y, got {axis!r}")
            return seq, DepthScript(kind=kind, axis=axis)
        return seq, DepthScript(kind=kind, path=base_dir / fields[2])
    if len(fields) != 7:
        raise ValueError(f"expected 7 fields, got {len(fields)}")
    cls = class_by_id(int(fields[1]))
    conf = float(fields[2])
    box = BBox(int(fields[3]), int(fields[4]), int(fields[5]), int(fields[6]))
    return seq, Detection(cls=cls, bbox=box, confidence=conf)


def _parse_annotation_line(line: str, scene: FixtureScene, base_dir: Path) -> None:
    seq, record = parse_record(line, base_dir)
    if isinstance(record, DepthScript):
        scene.depth_scripts[seq] = record
    else:
        scene.detections.setdefault(seq, []).append(record)


def sort_detections(dets: list[Detection]) -> list[Detection]:
    """Descending confidence; ties by class id then x_min (total order)."""
    return sorted(dets, key=lambda d: (-d.confidence, d.cls.id, d.bbox.x_min))


class FixtureDetectorBackend:
    """Replays scripted detections, filtered and ordered like a real model."""

    def __init__(self, scene: FixtureScene, conf_threshold: float = DEFAULT_CONF_THRESHOLD):
        self.scene = scene
        self.conf_threshold = conf_threshold

    def detect(self, frame: Frame) -> list[Detection]:
        raw = self.scene.detections.get(frame.seq, [])
        kept = [
            Detection(
                cls=d.cls,
                bbox=d.bbox.clamped(frame.width, frame.height),
                confidence=d.confidence,
            )
            for d in raw
            if d.confidence >= self.conf_threshold
        ]
        return sort_detections(kept)


def normalize_depth(values: np.ndarray) -> np.ndarray:
    """Min/max-normalize raw depth output to [0, 1] float32.

    A constant field has no spread and maps to mid-distance 0.5.
    """
    values = values.astype(np.float64)
    vmin = float(values.min())
    vmax = float(values.max())
    if vmax == vmin:
        return np.full(values.shape, 0.5, dtype=np.float32)
    out = (values - vmin) / (vmax - vmin)
    return out.astype(np.float32)


def depth_from_script(script: DepthScript, width: int, height: int) -> DepthMap:
    if script.kind == "constant":
        values = np.full((height, width), script.value, dtype=np.float32)
    elif script.kind == "gradient":
        if script.axis == "x":
            ramp = np.arange(width, dtype=np.float32) / max(width - 1, 1)
            values = np.broadcast_to(ramp, (height, width)).copy()
        else:
            ramp = np.arange(height, dtype=np.float32) / max(height - 1, 1)
            values = np.broadcast_to(ramp[:, None], (height, width)).copy()
    elif script.kind == "file":
        raw = cv2.imread(str(script.path), cv2.IMREAD_UNCHANGED)
        if raw is None:
            raise BackendUnavailable(f"cannot read depth image {script.path}")
        if raw.ndim == 3:
            raw = raw[..., 0]
        if raw.shape != (height, width):
            raw = cv2.resize(raw.astype(np.float32), (width, height), interpolation=cv2.INTER_LINEAR)
        values = normalize_depth(raw)
    else:
        raise ValueError(f"unknown depth script kind {script.kind!r}")
    return DepthMap.from_array(values)


class FixtureDepthBackend:
    """Builds depth maps from the scene's depth scripts."""

    def __init__(self, scene: FixtureScene):
        self.scene = scene

    def estimate_depth(self, frame: Frame) -> DepthMap:
        script = self.scene.depth_scripts.get(frame.seq)
        if script is None:
            raise BackendUnavailable(f"no depth script for seq {frame.seq}")
        return depth_from_script(script, frame.width, frame.height)
