import math
import random

import numpy as np
import pytest

from scenereader.evalkit import (
    AugmentationDraw,
    AugmentationSpec,
    SplitPlan,
    augment,
    plan_splits,
    sample_draws,
)
from scenereader.evalkit.dataset import draw_matrix
from scenereader.model import BBox

from oracles import transform_box_hull, transform_point


def census(assignment):
    counts = {"train": 0, "val": 0, "test": 0}
    for split in assignment.values():
        counts[split] += 1
    return counts


class TestSplitPlan:
    def test_fractions_must_sum_to_one(self):
        with pytest.raises(ValueError, match="sum"):
            SplitPlan(train=0.5, val=0.5, test=0.5)

    def test_negative_fraction_rejected(self):
        with pytest.raises(ValueError):
            SplitPlan(train=1.2, val=-0.1, test=-0.1)

    def test_defaults(self):
        plan = SplitPlan()
        assert (plan.train, plan.val, plan.test) == (0.70, 0.20, 0.10)
        assert plan.excluded_apps == frozenset({"Engage", "Spatial", "Half+Half"})
        assert plan.excluded_val_fraction == 0.67


class TestPlanSplits:
    def test_counts_follow_floor_rule(self):
        images = {f"img{i:04d}": "RecRoom" for i in range(1000)}
        counts = census(plan_splits(images))
        assert counts == {
            "train": math.floor(1000 * 0.70),
            "val": math.floor(1000 * 0.20),
            "test": 1000 - 700 - 200,
        }

    def test_remainder_goes_to_test(self):
        images = {f"i{i}": "RecRoom" for i in range(7)}
        counts = census(plan_splits(images))
        # floor(4.9) = 4 train, floor(1.4) = 1 val, rest = 2 test
        assert counts == {"train": 4, "val": 1, "test": 2}

    def test_held_out_apps_skip_training(self):
        images = {f"e{i}": "Engage" for i in range(9)}
        images.update({f"s{i}": "Spatial" for i in range(6)})
        assignment = plan_splits(images)
        assert "train" not in assignment.values()

    def test_held_out_val_test_rounding(self):
        images = {f"e{i}": "Half+Half" for i in range(9)}
        counts = census(plan_splits(images))
        # round(9 * 0.67) = round(6.03) = 6
        assert counts == {"train": 0, "val": 6, "test": 3}

    def test_mixed_population(self):
        images = {f"n{i}": "RecRoom" for i in range(10)}
        images.update({f"x{i}": "Engage" for i in range(4)})
        assignment = plan_splits(images)
        held = {k: v for k, v in assignment.items() if k.startswith("x")}
        assert sorted(held.values()) == ["test", "val", "val", "val"]  # round(2.68) = 3
        normal = census({k: v for k, v in assignment.items() if k.startswith("n")})
        assert normal == {"train": 7, "val": 2, "test": 1}

    def test_duplicate_ids_rejected(self):
        with pytest.raises(ValueError, match="duplicate"):
            plan_splits([("a", "RecRoom"), ("a", "Engage")])

    def test_deterministic_per_seed_and_order_free(self):
        pairs = [(f"img{i}", "RecRoom" if i % 3 else "Engage") for i in range(50)]
        a = plan_splits(pairs, seed=4)
        b = plan_splits(list(reversed(pairs)), seed=4)
        assert a == b
        c = plan_splits(pairs, seed=5)
        assert a != c

    def test_accepts_mapping_or_pairs(self):
        pairs = [("a", "RecRoom"), ("b", "RecRoom")]
        assert plan_splits(pairs) == plan_splits(dict(pairs))


class TestAugmentationSpec:
    def test_range_validation(self):
        with pytest.raises(ValueError):
            AugmentationSpec(max_rotation_deg=400.0)
        with pytest.raises(ValueError):
            AugmentationSpec(max_magnification=0.5)
        with pytest.raises(ValueError):
            AugmentationSpec(max_shear_deg=20.0)
        with pytest.raises(ValueError):
            AugmentationSpec(copies=-1)

    def test_draw_identity_flag(self):
        assert AugmentationDraw().is_identity
        assert not AugmentationDraw(flip_h=True).is_identity
        assert not AugmentationDraw(rotation_deg=10.0).is_identity


class TestSampleDraws:
    def test_deterministic_per_seed(self):
        spec = AugmentationSpec(seed=13)
        assert sample_draws(spec) == sample_draws(spec)
        assert sample_draws(spec) != sample_draws(AugmentationSpec(seed=14))

    def test_count_overrides_copies(self):
        spec = AugmentationSpec(copies=3, seed=1)
        assert len(sample_draws(spec, count=7)) == 7
        assert len(sample_draws(spec)) == 3

    def test_ranges_respected(self):
        spec = AugmentationSpec(copies=200, seed=2)
        for d in sample_draws(spec):
            assert 0.0 <= d.rotation_deg < 360.0
            assert 0.0 <= d.magnification <= 0.20
            assert -15.0 <= d.shear_h_deg <= 15.0
            assert -15.0 <= d.shear_v_deg <= 15.0

    def test_disallowed_flip_skips_rng_draw(self):
        # when flips are disallowed the coin for them must not be tossed,
        # so the remaining parameters line up with a fresh RNG stream
        spec = AugmentationSpec(
            allow_horizontal_flip=False, allow_vertical_flip=False, copies=3, seed=9
        )
        draws = sample_draws(spec)
        rng = random.Random(9)
        for d in draws:
            assert not d.flip_h and not d.flip_v
            assert d.rotation_deg == rng.uniform(0.0, spec.max_rotation_deg) % 360.0
            assert d.magnification == rng.uniform(0.0, spec.max_magnification)
            assert d.shear_h_deg == rng.uniform(-15.0, 15.0)
            assert d.shear_v_deg == rng.uniform(-15.0, 15.0)

    def test_flip_honors_allow_flags(self):
        spec = AugmentationSpec(allow_vertical_flip=False, copies=100, seed=3)
        draws = sample_draws(spec)
        assert any(d.flip_h for d in draws)
        assert not any(d.flip_v for d in draws)


def draw_params(draw):
    return dict(
        flip_h=draw.flip_h,
        flip_v=draw.flip_v,
        rotation_deg=draw.rotation_deg,
        magnification=draw.magnification,
        shear_h_deg=draw.shear_h_deg,
        shear_v_deg=draw.shear_v_deg,
    )


class TestDrawMatrix:
    def test_identity_matrix(self):
        m = draw_matrix(AugmentationDraw(), 640, 480)
        assert np.allclose(m, np.eye(3))

    def test_flip_h_pivots_about_center(self):
        m = draw_matrix(AugmentationDraw(flip_h=True), 640, 480)
        moved = m @ np.array([10.0, 20.0, 1.0])
        assert moved[0] == pytest.approx(630.0)
        assert moved[1] == pytest.approx(20.0)

    def test_matches_pointwise_oracle(self):
        rng = np.random.default_rng(17)
        spec = AugmentationSpec(copies=100, seed=21)
        for draw in sample_draws(spec):
            w = int(rng.integers(16, 1280))
            h = int(rng.integers(16, 1280))
            m = draw_matrix(draw, w, h)
            x = float(rng.uniform(0, w))
            y = float(rng.uniform(0, h))
            moved = m @ np.array([x, y, 1.0])
            ox, oy = transform_point(x, y, width=w, height=h, **draw_params(draw))
            assert moved[0] == pytest.approx(ox, abs=1e-9)
            assert moved[1] == pytest.approx(oy, abs=1e-9)


class TestAugment:
    def test_identity_is_a_bit_exact_no_op(self):
        rng = np.random.default_rng(31)
        image = rng.integers(0, 255, size=(48, 64, 3), dtype=np.uint8)
        boxes = [BBox(5, 5, 20, 20), BBox(30, 10, 60, 40)]
        out, mapped = augment(image, boxes, AugmentationSpec(), AugmentationDraw())
        assert np.array_equal(out, image)
        assert out is not image  # a copy, so later edits cannot alias
        assert mapped == boxes

    def test_horizontal_flip_box_frozen(self):
        image = np.zeros((480, 640, 3), dtype=np.uint8)
        _, mapped = augment(
            image, [BBox(10, 20, 30, 40)], AugmentationSpec(), AugmentationDraw(flip_h=True)
        )
        b = mapped[0]
        assert (b.x_min, b.y_min, b.x_max, b.y_max) == (610.0, 20.0, 630.0, 40.0)

    def test_box_leaving_frame_maps_to_none(self):
        image = np.zeros((100, 100, 3), dtype=np.uint8)
        draw = AugmentationDraw(magnification=0.2)  # pushes corners outward
        _, mapped = augment(image, [BBox(0, 0, 3, 3)], AugmentationSpec(), draw)
        assert mapped == [None]

    def test_warp_fills_border_gray(self):
        image = np.full((100, 100, 3), 200, dtype=np.uint8)
        draw = AugmentationDraw(rotation_deg=45.0)
        out, _ = augment(image, [], AugmentationSpec(), draw)
        assert tuple(out[0, 0]) == (114, 114, 114)

    def test_boxes_match_corner_hull_oracle(self):
        rng = np.random.default_rng(47)
        image = np.zeros((200, 300, 3), dtype=np.uint8)
        spec = AugmentationSpec(copies=500, seed=77)
        for draw in sample_draws(spec):
            x0 = float(rng.uniform(0, 280))
            y0 = float(rng.uniform(0, 180))
            box = BBox(x0, y0, x0 + float(rng.uniform(2, 60)), y0 + float(rng.uniform(2, 60)))
            _, mapped = augment(image, [box], spec, draw)
            want = transform_box_hull(
                (box.x_min, box.y_min, box.x_max, box.y_max),
                300,
                200,
                **draw_params(draw),
            )
            got = mapped[0]
            if want is None:
                assert got is None
                continue
            assert got is not None
            for a, b in zip((got.x_min, got.y_min, got.x_max, got.y_max), want):
                assert abs(a - b) <= 1.0
