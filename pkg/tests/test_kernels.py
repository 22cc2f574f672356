"""The compiled kernels and the numpy fallback must agree bit for bit, so
either build can back the rest of the suite."""

import numpy as np
import pytest

import scenereader._kernels as kernels
from scenereader._kernels import _fallback

import oracles

try:
    from scenereader._kernels import _native
except ImportError:
    _native = None

BACKENDS = [("fallback", _fallback)] + ([("native", _native)] if _native else [])

needs_native = pytest.mark.skipif(_native is None, reason="compiled extension not built")


def random_rgb(rng, h=48, w=64):
    return rng.integers(0, 256, size=(h, w, 3), dtype=np.uint8)


class TestActiveBackend:
    def test_backend_selected(self):
        assert kernels.ACTIVE_BACKEND in ("native", "fallback")

    def test_env_override_forces_fallback(self):
        import subprocess
        import sys

        out = subprocess.run(
            [
                sys.executable,
                "-c",
                "import scenereader._kernels as k; print(k.ACTIVE_BACKEND)",
            ],
            env={"SCENEREADER_PURE_PYTHON": "1", "PATH": "/usr/bin:/bin"},
            capture_output=True,
            text=True,
        )
        assert out.stdout.strip() == "fallback"


@needs_native
class TestNativeMatchesFallback:
    def test_hsv_mask_coords(self):
        rng = np.random.default_rng(11)
        for trial in range(25):
            rgb = random_rgb(rng)
            lo, hi = sorted(rng.uniform(0, 360, size=2))
            if trial % 3 == 0:
                lo, hi = hi, lo  # wrapped range
            s_min = float(rng.uniform(0, 1))
            v_min = float(rng.uniform(0, 1))
            nx, ny = _native.hsv_mask_coords(rgb, lo, hi, s_min, v_min)
            fx, fy = _fallback.hsv_mask_coords(rgb, lo, hi, s_min, v_min)
            np.testing.assert_array_equal(nx, fx)
            np.testing.assert_array_equal(ny, fy)

    def test_hsv_mask_accepts_readonly_input(self):
        rng = np.random.default_rng(3)
        rgb = random_rgb(rng)
        rgb.setflags(write=False)
        _native.hsv_mask_coords(rgb, 90.0, 150.0, 0.35, 0.25)

    def test_line_distances(self):
        rng = np.random.default_rng(12)
        for _ in range(25):
            n = int(rng.integers(1, 500))
            xs = rng.integers(0, 640, size=n).astype(np.int32)
            ys = rng.integers(0, 480, size=n).astype(np.int32)
            px, py = rng.uniform(0, 640), rng.uniform(0, 480)
            theta = rng.uniform(0, 2 * np.pi)
            dx, dy = np.cos(theta), np.sin(theta)
            nat = np.asarray(_native.line_distances(xs, ys, px, py, dx, dy))
            fal = np.asarray(_fallback.line_distances(xs, ys, px, py, dx, dy))
            np.testing.assert_array_equal(nat, fal)

    def test_box_median_random_rectangles(self):
        rng = np.random.default_rng(13)
        values = rng.random((120, 160), dtype=np.float32)
        for _ in range(200):
            x0, x1 = sorted(rng.integers(0, 160, size=2))
            y0, y1 = sorted(rng.integers(0, 120, size=2))
            nat = _native.box_median(values, x0, y0, x1, y1)
            fal = _fallback.box_median(values, x0, y0, x1, y1)
            assert nat == fal  # bit-identical, no tolerance

    def test_box_median_tie_heavy_values(self):
        # Quantized depth maps are full of duplicate values; selection must
        # still agree with sorting exactly.
        rng = np.random.default_rng(14)
        values = (rng.integers(0, 4, size=(60, 80)) / 4.0).astype(np.float32)
        for _ in range(200):
            x0, x1 = sorted(rng.integers(0, 80, size=2))
            y0, y1 = sorted(rng.integers(0, 60, size=2))
            assert _native.box_median(values, x0, y0, x1, y1) == _fallback.box_median(
                values, x0, y0, x1, y1
            )

    def test_iou_matrix(self):
        rng = np.random.default_rng(15)
        for _ in range(25):
            n, m = rng.integers(0, 30, size=2)
            a = np.sort(rng.uniform(0, 640, size=(int(n), 2, 2)), axis=1)
            b = np.sort(rng.uniform(0, 640, size=(int(m), 2, 2)), axis=1)
            a = a.transpose(0, 2, 1).reshape(-1, 4)
            b = b.transpose(0, 2, 1).reshape(-1, 4)
            nat = np.asarray(_native.iou_matrix(a, b))
            fal = np.asarray(_fallback.iou_matrix(a, b))
            np.testing.assert_array_equal(nat, fal)


@pytest.mark.parametrize("name,backend", BACKENDS)
class TestKernelContracts:
    def test_median_matches_plain_sort(self, name, backend):
        rng = np.random.default_rng(21)
        values = rng.random((40, 50), dtype=np.float32)
        for _ in range(60):
            x0, x1 = sorted(rng.integers(0, 50, size=2))
            y0, y1 = sorted(rng.integers(0, 40, size=2))
            got = backend.box_median(values, x0, y0, x1, y1)
            want = oracles.median_of(values[y0 : y1 + 1, x0 : x1 + 1].ravel().tolist())
            assert got == want

    def test_iou_matrix_against_scalar_oracle(self, name, backend):
        rng = np.random.default_rng(22)
        a = np.sort(rng.uniform(0, 100, size=(6, 2, 2)), axis=1).transpose(0, 2, 1).reshape(-1, 4)
        b = np.sort(rng.uniform(0, 100, size=(5, 2, 2)), axis=1).transpose(0, 2, 1).reshape(-1, 4)
        got = np.asarray(backend.iou_matrix(a, b))
        for i in range(a.shape[0]):
            for j in range(b.shape[0]):
                assert got[i, j] == pytest.approx(
                    oracles.rect_iou(tuple(a[i]), tuple(b[j])), abs=1e-12
                )

    def test_hsv_matches_colorsys(self, name, backend):
        import colorsys

        rng = np.random.default_rng(23)
        rgb = random_rgb(rng, h=12, w=16)
        lo, hi, s_min, v_min = 80.0, 170.0, 0.3, 0.2
        xs, ys = backend.hsv_mask_coords(rgb, lo, hi, s_min, v_min)
        mask = set(zip(xs.tolist(), ys.tolist()))
        for y in range(rgb.shape[0]):
            for x in range(rgb.shape[1]):
                r, g, b = (float(v) / 255.0 for v in rgb[y, x])
                hh, ss, vv = colorsys.rgb_to_hsv(r, g, b)
                expect = (lo <= hh * 360.0 <= hi) and ss >= s_min and vv >= v_min
                assert ((x, y) in mask) == expect, (x, y, rgb[y, x])

    def test_line_distances_zero_on_line(self, name, backend):
        xs = np.array([10, 20, 30], dtype=np.int32)
        ys = np.array([10, 20, 30], dtype=np.int32)
        d = np.sqrt(0.5)
        out = np.asarray(backend.line_distances(xs, ys, 0.0, 0.0, d, d))
        assert np.all(out < 1e-9)
