"""Dataset split planning and affine augmentation with box mapping.

Split assignment is computed before augmentation so augmented copies can
never leak across splits.  All randomness is seeded and independent of
input ordering (ids are sorted before shuffling).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Mapping, Sequence

import cv2
import numpy as np

from ..model import BBox

DEFAULT_EXCLUDED_APPS = frozenset({"Engage", "Spatial", "Half+Half"})

_PAD_GRAY = (114, 114, 114)


@dataclass(frozen=True, slots=True)
class SplitPlan:
    """Fractions for train/val/test plus apps held out of training entirely.

    Held-out app images land only in val/test, split 67/33 between them.
    """

    train: float = 0.70
    val: float = 0.20
    test: float = 0.10
    excluded_apps: frozenset[str] = DEFAULT_EXCLUDED_APPS
    excluded_val_fraction: float = 0.67

    def __post_init__(self) -> None:
        total = self.train + self.val + self.test
        if abs(total - 1.0) > 1e-9:
            raise ValueError(f"fractions sum to {total}, not 1")
        if min(self.train, self.val, self.test) < 0:
            raise ValueError("fractions must be non-negative")
        if not 0.0 <= self.excluded_val_fraction <= 1.0:
            raise ValueError("excluded_val_fraction outside [0, 1]")


def plan_splits(
    images: Mapping[str, str] | Sequence[tuple[str, str]],
    plan: SplitPlan = SplitPlan(),
    seed: int = 0,
) -> dict[str, str]:
    """Assign each (image_id, app) to "train", "val", or "test".

    Deterministic per seed: ids are sorted, then shuffled by one RNG.
    Excluded-app images never reach train.
    """
    pairs = list(images.items()) if isinstance(images, Mapping) else list(images)
    ids_seen = set()
    for image_id, _ in pairs:
        if image_id in ids_seen:
            raise ValueError(f"duplicate image id {image_id!r}")
        ids_seen.add(image_id)

    rng = random.Random(seed)
    normal = sorted(i for i, app in pairs if app not in plan.excluded_apps)
    held_out = sorted(i for i, app in pairs if app in plan.excluded_apps)
    rng.shuffle(normal)
    rng.shuffle(held_out)

    assignment: dict[str, str] = {}
    n = len(normal)
    n_train = math.floor(n * plan.train)
    n_val = math.floor(n * plan.val)
    for i, image_id in enumerate(normal):
        if i < n_train:
            assignment[image_id] = "train"
        elif i < n_train + n_val:
            assignment[image_id] = "val"
        else:
            assignment[image_id] = "test"

    n_val_held = round(len(held_out) * plan.excluded_val_fraction)
    for i, image_id in enumerate(held_out):
        assignment[image_id] = "val" if i < n_val_held else "test"
    return assignment


@dataclass(frozen=True, slots=True)
class AugmentationSpec:
    """Sampling ranges for the affine augmentations, all seeded.

    rotation is drawn from [0, max_rotation_deg), magnification from
    [0, max_magnification] (scale factor 1 + m), shear per axis from
    [-max_shear_deg, +max_shear_deg].
    """

    copies: int = 3
    allow_horizontal_flip: bool = True
    allow_vertical_flip: bool = True
    max_rotation_deg: float = 360.0
    max_magnification: float = 0.20
    max_shear_deg: float = 15.0
    seed: int = 0

    def __post_init__(self) -> None:
        if self.copies < 0:
            raise ValueError("copies must be non-negative")
        if not 0.0 <= self.max_rotation_deg <= 360.0:
            raise ValueError("max_rotation_deg outside [0, 360]")
        if not 0.0 <= self.max_magnification <= 0.20:
            raise ValueError("max_magnification outside [0, 0.20]")
        if not 0.0 <= self.max_shear_deg <= 15.0:
            raise ValueError("max_shear_deg outside [0, 15]")


@dataclass(frozen=True, slots=True)
class AugmentationDraw:
    """One sampled parameter set.

    The normative composition order, anchored at the frame center, is:
    flip, then scale (1 + magnification), then shear, then rotation.
    """

    flip_h: bool = False
    flip_v: bool = False
    rotation_deg: float = 0.0
    magnification: float = 0.0
    shear_h_deg: float = 0.0
    shear_v_deg: float = 0.0

    @property
    def is_identity(self) -> bool:
        return (
            not self.flip_h
            and not self.flip_v
            and self.rotation_deg == 0.0
            and self.magnification == 0.0
            and self.shear_h_deg == 0.0
            and self.shear_v_deg == 0.0
        )


def sample_draws(spec: AugmentationSpec, count: int | None = None) -> list[AugmentationDraw]:
    rng = random.Random(spec.seed)
    n = spec.copies if count is None else count
    draws = []
    for _ in range(n):
        draws.append(
            AugmentationDraw(
                flip_h=spec.allow_horizontal_flip and rng.random() < 0.5,
                flip_v=spec.allow_vertical_flip and rng.random() < 0.5,
                rotation_deg=rng.uniform(0.0, spec.max_rotation_deg) % 360.0,
                magnification=rng.uniform(0.0, spec.max_magnification),
                shear_h_deg=rng.uniform(-spec.max_shear_deg, spec.max_shear_deg),
                shear_v_deg=rng.uniform(-spec.max_shear_deg, spec.max_shear_deg),
            )
        )
    return draws


def draw_matrix(draw: AugmentationDraw, width: int, height: int) -> np.ndarray:
    """3x3 forward transform (source -> destination coordinates)."""
    cx, cy = width / 2.0, height / 2.0

    def mat(rows: Sequence[Sequence[float]]) -> np.ndarray:
        return np.array(rows, dtype=np.float64)

    to_center = mat([[1, 0, -cx], [0, 1, -cy], [0, 0, 1]])
    back = mat([[1, 0, cx], [0, 1, cy], [0, 0, 1]])
    flip = mat(
        [
            [-1.0 if draw.flip_h else 1.0, 0, 0],
            [0, -1.0 if draw.flip_v else 1.0, 0],
            [0, 0, 1],
        ]
    )
    s = 1.0 + draw.magnification
    scale = mat([[s, 0, 0], [0, s, 0], [0, 0, 1]])
    shear = mat(
        [
            [1, math.tan(math.radians(draw.shear_h_deg)), 0],
            [math.tan(math.radians(draw.shear_v_deg)), 1, 0],
            [0, 0, 1],
        ]
    )
    theta = math.radians(draw.rotation_deg)
    rot = mat(
        [
            [math.cos(theta), -math.sin(theta), 0],
            [math.sin(theta), math.cos(theta), 0],
            [0, 0, 1],
        ]
    )
    return back @ rot @ shear @ scale @ flip @ to_center


def _map_box(box: BBox, m: np.ndarray, width: int, height: int) -> BBox | None:
    corners = np.array(
        [
            [box.x_min, box.y_min, 1.0],
            [box.x_max, box.y_min, 1.0],
            [box.x_max, box.y_max, 1.0],
            [box.x_min, box.y_max, 1.0],
        ],
        dtype=np.float64,
    )
    moved = corners @ m.T
    xs = moved[:, 0]
    ys = moved[:, 1]
    x0 = max(0.0, float(xs.min()))
    y0 = max(0.0, float(ys.min()))
    x1 = min(float(width), float(xs.max()))
    y1 = min(float(height), float(ys.max()))
    if x1 <= x0 or y1 <= y0:
        return None
    return BBox(x0, y0, x1, y1)


def augment(
    image: np.ndarray,
    boxes: Sequence[BBox],
    spec: AugmentationSpec,
    draw: AugmentationDraw,
) -> tuple[np.ndarray, list[BBox | None]]:
    """Apply one draw to pixels and boxes.

    Each box becomes the axis-aligned hull of its four transformed corners,
    clipped to the frame; a box pushed fully outside maps to ``None``.
    Identity draws return the inputs untouched (bit-exact).
    """
    del spec  # ranges were enforced when the draw was sampled
    height, width = image.shape[:2]
    if draw.is_identity:
        return image.copy(), list(boxes)
    m = draw_matrix(draw, width, height)
    warped = cv2.warpAffine(
        image,
        m[:2],
        (width, height),
        flags=cv2.INTER_LINEAR,
        borderMode=cv2.BORDER_CONSTANT,
        borderValue=_PAD_GRAY,
    )
    mapped = [_map_box(b, m, width, height) for b in boxes]
    return warped, mapped
