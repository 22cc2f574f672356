"""Pure-numpy implementations of the hot per-pixel kernels.

Loaded when the compiled extension is unavailable (or forced via
``SCENEREADER_PURE_PYTHON=1``). Function contracts are shared with
``_native.pyx``; both implementations must return bit-identical results
so either can back the test suite.
"""

import numpy as np


def hsv_mask_coords(rgb, hue_lo, hue_hi, s_min, v_min):
    """Coordinates of pixels whose HSV color falls in the acceptance range.

    ``rgb`` is a (H, W, 3) uint8 array. Hue is in degrees [0, 360); a range
    with ``hue_lo > hue_hi`` wraps around 0. Returns ``(xs, ys)`` int32
    arrays in row-major scan order.
    """
    px = rgb.astype(np.float64)
    r, g, b = px[..., 0], px[..., 1], px[..., 2]
    mx = np.maximum(np.maximum(r, g), b)
    mn = np.minimum(np.minimum(r, g), b)
    delta = mx - mn

    v = mx / 255.0
    with np.errstate(invalid="ignore", divide="ignore"):
        s = np.where(mx > 0.0, delta / mx, 0.0)
        hue = np.zeros_like(mx)
        nz = delta > 0.0
        r_is_max = nz & (mx == r)
        g_is_max = nz & ~r_is_max & (mx == g)
        b_is_max = nz & ~r_is_max & ~g_is_max
        hue = np.where(r_is_max, (60.0 * (g - b) / delta) % 360.0, hue)
        hue = np.where(g_is_max, 60.0 * (b - r) / delta + 120.0, hue)
        hue = np.where(b_is_max, 60.0 * (r - g) / delta + 240.0, hue)

    if hue_lo <= hue_hi:
        in_hue = (hue >= hue_lo) & (hue <= hue_hi)
    else:
        in_hue = (hue >= hue_lo) | (hue <= hue_hi)
    mask = in_hue & (s >= s_min) & (v >= v_min)

    ys, xs = np.nonzero(mask)
    return xs.astype(np.int32), ys.astype(np.int32)


def line_distances(xs, ys, px, py, dx, dy):
    """Perpendicular distance of each (x, y) point to the line through
    (px, py) with unit direction (dx, dy)."""
    return np.abs(
        (xs.astype(np.float64) - px) * dy - (ys.astype(np.float64) - py) * dx
    )


def box_median(values, x0, y0, x1, y1):
    """Median of ``values[y0..y1, x0..x1]`` (inclusive pixel rectangle).

    Even-sized samples average the two middle values in float64, matching
    the native kernel exactly.
    """
    block = np.sort(values[y0 : y1 + 1, x0 : x1 + 1], axis=None)
    n = block.size
    if n == 0:
        raise ValueError("empty pixel rectangle")
    mid = n // 2
    if n % 2 == 1:
        return float(block[mid])
    return (float(block[mid - 1]) + float(block[mid])) / 2.0


def iou_matrix(a, b):
    """Pairwise IoU of two (n, 4) / (m, 4) float64 box arrays laid out as
    (x_min, y_min, x_max, y_max). Continuous-area convention; zero-area
    unions score 0."""
    a = np.asarray(a, dtype=np.float64).reshape(-1, 4)
    b = np.asarray(b, dtype=np.float64).reshape(-1, 4)
    ix0 = np.maximum(a[:, None, 0], b[None, :, 0])
    iy0 = np.maximum(a[:, None, 1], b[None, :, 1])
    ix1 = np.minimum(a[:, None, 2], b[None, :, 2])
    iy1 = np.minimum(a[:, None, 3], b[None, :, 3])
    iw = np.maximum(0.0, ix1 - ix0)
    ih = np.maximum(0.0, iy1 - iy0)
    inter = iw * ih
    area_a = (a[:, 2] - a[:, 0]) * (a[:, 3] - a[:, 1])
    area_b = (b[:, 2] - b[:, 0]) * (b[:, 3] - b[:, 1])
    union = area_a[:, None] + area_b[None, :] - inter
    out = np.zeros_like(inter)
    np.divide(inter, union, out=out, where=union > 0.0)
    return out
