"""Laser-pointer detection: HSV color mask plus robust line fit.

The color profile is parameterized so apps with non-green pointers can be
supported by configuration; under the default green profile, off-color
pointers are (by design) not detected.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .. import _kernels
from ..model import Frame, PointerRay


@dataclass(frozen=True, slots=True)
class PointerColorProfile:
    """HSV acceptance range. ``hue_lo > hue_hi`` wraps through 0 degrees."""

    hue_lo: float = 90.0
    hue_hi: float = 150.0
    s_min: float = 0.35
    v_min: float = 0.25
    min_pixels: int = 50


GREEN_POINTER = PointerColorProfile()

_INLIER_TOL_PX = 2.0
_MIN_INLIER_FRACTION = 0.6


def _fit_direction(xs: np.ndarray, ys: np.ndarray) -> tuple[float, float, float, float]:
    """Total-least-squares line through the points: centroid + unit direction."""
    cx = float(xs.mean())
    cy = float(ys.mean())
    centered = np.stack([xs - cx, ys - cy], axis=1)
    _, _, vh = np.linalg.svd(centered, full_matrices=False)
    dx, dy = float(vh[0, 0]), float(vh[0, 1])
    return cx, cy, dx, dy


def detect_pointer(
    frame: Frame, profile: PointerColorProfile = GREEN_POINTER
) -> PointerRay | None:
    """Fit a pointer ray to color-masked pixels, or report none.

    Fit is total least squares with one reweighting pass that discards
    pixels farther than 2 px from the first line. Confidence is the final
    inlier fraction; below 0.6 the mask is considered non-linear (noise)
    and no ray is returned. The endpoint nearer the bottom of the frame is
    taken as the controller side; ``end`` is the opposite extremum.
    """
    xs_i, ys_i = _kernels.hsv_mask_coords(
        np.ascontiguousarray(frame.pixels),
        profile.hue_lo,
        profile.hue_hi,
        profile.s_min,
        profile.v_min,
    )
    n = xs_i.shape[0]
    if n < profile.min_pixels:
        return None

    xs = xs_i.astype(np.float64)
    ys = ys_i.astype(np.float64)
    cx, cy, dx, dy = _fit_direction(xs, ys)
    dist = _kernels.line_distances(xs_i, ys_i, cx, cy, dx, dy)
    keep = dist <= _INLIER_TOL_PX
    if int(keep.sum()) >= 2:
        cx, cy, dx, dy = _fit_direction(xs[keep], ys[keep])
        dist = _kernels.line_distances(xs_i, ys_i, cx, cy, dx, dy)

    inliers = dist <= _INLIER_TOL_PX
    confidence = float(inliers.sum()) / float(n)
    if confidence < _MIN_INLIER_FRACTION:
        return None

    ix = xs[inliers]
    iy = ys[inliers]
    t = (ix - cx) * dx + (iy - cy) * dy
    lo = int(np.argmin(t))
    hi = int(np.argmax(t))
    p0 = (float(ix[lo]), float(iy[lo]))
    p1 = (float(ix[hi]), float(iy[hi]))
    if p0 == p1:
        return None

    # Controllers are held below eye level: the extremum nearer the frame
    # bottom is the ray origin.
    if p0[1] > p1[1]:
        start, end = p0, p1
    elif p1[1] > p0[1]:
        start, end = p1, p0
    else:
        start, end = (p0, p1) if p0[0] < p1[0] else (p1, p0)
    return PointerRay(start=start, end=end, confidence=min(confidence, 1.0))
