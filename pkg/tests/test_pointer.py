"""Synthetic pointer renders: a bright green segment on a dim background.

The renders vary endpoint positions, thickness, background clutter, and
noise; the detector must recover the far (top) endpoint and must stay
silent for off-color or too-small marks.
"""

import math

import cv2
import numpy as np
import pytest

from scenereader.model import Frame
from scenereader.perception.pointer import (
    GREEN_POINTER,
    PointerColorProfile,
    detect_pointer,
)

W, H = 480, 360
POINTER_BGR = (70, 220, 70)  # symmetric R/B, so identical in RGB order


def render(
    rng: np.random.Generator,
    start: tuple[int, int],
    end: tuple[int, int],
    thickness: int = 3,
    color=POINTER_BGR,
    noise_hi: int = 45,
) -> Frame:
    img = rng.integers(0, noise_hi, size=(H, W, 3)).astype(np.uint8)
    cv2.line(img, start, end, color, thickness)
    rgb = cv2.cvtColor(img, cv2.COLOR_BGR2RGB)
    return Frame.from_array(rgb)


def random_segment(rng: np.random.Generator) -> tuple[tuple[int, int], tuple[int, int]]:
    """Start below, end above, long enough to be unambiguous."""
    while True:
        sx, ex = rng.integers(20, W - 20, size=2)
        sy = int(rng.integers(H // 2 + 30, H - 10))
        ey = int(rng.integers(10, H // 2 - 30))
        if math.hypot(int(ex) - int(sx), ey - sy) >= 80:
            return (int(sx), sy), (int(ex), ey)


class TestEndpointRecovery:
    def test_two_hundred_renders_within_five_px(self):
        rng = np.random.default_rng(31)
        hits = 0
        total = 200
        for i in range(total):
            start, end = random_segment(rng)
            frame = render(rng, start, end, thickness=int(rng.integers(2, 5)))
            ray = detect_pointer(frame)
            if ray is None:
                continue
            if math.hypot(ray.end[0] - end[0], ray.end[1] - end[1]) <= 5.0:
                hits += 1
        assert hits >= 0.95 * total, f"only {hits}/{total} endpoints within 5 px"

    def test_far_endpoint_is_the_top_one(self):
        rng = np.random.default_rng(32)
        frame = render(rng, (100, 300), (320, 60))
        ray = detect_pointer(frame)
        assert ray is not None
        assert ray.end[1] < ray.start[1]

    def test_confidence_reported(self):
        rng = np.random.default_rng(33)
        frame = render(rng, (100, 300), (320, 60))
        ray = detect_pointer(frame)
        assert ray is not None
        assert 0.6 <= ray.confidence <= 1.0


class TestRejection:
    def test_sub_threshold_pixel_count_returns_none(self):
        rng = np.random.default_rng(34)
        for _ in range(40):
            # a dot far below min_pixels
            img = rng.integers(0, 45, size=(H, W, 3)).astype(np.uint8)
            cv2.circle(img, (W // 2, H // 2), 2, POINTER_BGR, -1)
            frame = Frame.from_array(cv2.cvtColor(img, cv2.COLOR_BGR2RGB))
            assert detect_pointer(frame) is None

    def test_wrong_color_returns_none(self):
        rng = np.random.default_rng(35)
        for color in [(220, 70, 70), (70, 70, 220), (200, 60, 200)]:
            for _ in range(15):
                start, end = random_segment(rng)
                frame = render(rng, start, end, color=color)
                assert detect_pointer(frame) is None, color

    def test_empty_frame_returns_none(self):
        frame = Frame.from_array(np.zeros((H, W, 3), dtype=np.uint8))
        assert detect_pointer(frame) is None

    def test_scattered_green_noise_fails_line_fit(self):
        rng = np.random.default_rng(36)
        img = np.zeros((H, W, 3), dtype=np.uint8)
        ys = rng.integers(0, H, size=300)
        xs = rng.integers(0, W, size=300)
        img[ys, xs] = (70, 220, 70)
        frame = Frame.from_array(img)
        assert detect_pointer(frame) is None


class TestProfiles:
    def test_custom_profile_hue_window(self):
        rng = np.random.default_rng(37)
        start, end = random_segment(rng)
        # magenta pointer, accepted only by a wrapped profile
        frame = render(rng, start, end, color=(200, 60, 200))
        wrapped = PointerColorProfile(hue_lo=270.0, hue_hi=330.0)
        assert detect_pointer(frame, wrapped) is not None
        assert detect_pointer(frame, GREEN_POINTER) is None

    def test_min_pixels_honored(self):
        rng = np.random.default_rng(38)
        start, end = random_segment(rng)
        frame = render(rng, start, end, thickness=3)
        greedy = PointerColorProfile(min_pixels=10 ** 6)
        assert detect_pointer(frame, greedy) is None
