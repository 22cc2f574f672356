"""Timing harness: per-stage pipeline latencies and kernel comparisons.

Stage rows cover the perception models (detect, edge, depth), each remote
service (llm, ocr, tts), and the keypress dispatch path.  "edge" times the
pointer line extraction, this engine's edge-analysis stage.  All runs use
fixture backends, so the numbers measure engine overhead, not model
inference.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

import cv2
import numpy as np

from .._kernels import _fallback
from ..model import BBox, Detection, Frame, SceneTone, class_by_name
from ..orchestrator import InteractionKey, Orchestrator, realized_latency
from ..perception.backends import (
    DepthScript,
    FixtureDepthBackend,
    FixtureDetectorBackend,
    FixtureScene,
)
from ..perception.pointer import detect_pointer
from ..services import FixtureServices, ServiceClient, ServiceKind

try:
    from .._kernels import _native
except ImportError:
    _native = None

BENCH_STAGES = ("detect", "edge", "depth", "llm", "ocr", "tts", "dispatch")


@dataclass(frozen=True, slots=True)
class StageStats:
    name: str
    count: int
    mean_ms: float
    p50_ms: float
    p99_ms: float


def nearest_rank_percentile(values: Sequence[float], pct: float) -> float:
    """Nearest-rank percentile over a non-empty sample."""
    if not values:
        raise ValueError("no samples")
    ordered = sorted(values)
    rank = math.ceil(pct / 100.0 * len(ordered))
    return ordered[max(0, min(rank, len(ordered)) - 1)]


def summarize_stages(samples: Mapping[str, Sequence[float]]) -> tuple[StageStats, ...]:
    rows = []
    for name, values in samples.items():
        if not values:
            continue
        rows.append(
            StageStats(
                name=name,
                count=len(values),
                mean_ms=sum(values) / len(values),
                p50_ms=nearest_rank_percentile(values, 50.0),
                p99_ms=nearest_rank_percentile(values, 99.0),
            )
        )
    return tuple(rows)


def format_stage_table(rows: Sequence[StageStats]) -> str:
    lines = ["stage\tcount\tmean_ms\tp50_ms\tp99_ms"]
    for row in rows:
        lines.append(
            f"{row.name}\t{row.count}\t{row.mean_ms:.3f}\t{row.p50_ms:.3f}\t{row.p99_ms:.3f}"
        )
    return "\n".join(lines) + "\n"


@dataclass(frozen=True, slots=True)
class BenchReport:
    stages: tuple[StageStats, ...]
    realized_ms: Mapping[str, tuple[float, ...]]

    def stage(self, name: str) -> StageStats | None:
        for row in self.stages:
            if row.name == name:
                return row
        return None

    def format_table(self) -> str:
        lines = format_stage_table(self.stages).splitlines()
        for key, values in self.realized_ms.items():
            if not values:
                continue
            mean = sum(values) / len(values)
            lines.append(f"realized:{key}\t{len(values)}\t{mean:.3f}\t-\t-")
        return "\n".join(lines) + "\n"


def _time_ms(fn: Callable[[], object], repeats: int) -> list[float]:
    out = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        out.append((time.perf_counter() - t0) * 1000.0)
    return out


def _bench_frame(seed: int, size: int = 640) -> Frame:
    rng = np.random.default_rng(seed)
    pixels = rng.integers(0, 80, size=(size, size, 3), dtype=np.uint8)
    cv2.line(pixels, (80, size - 60), (size - 140, 120), (0, 255, 0), 3)
    return Frame.from_array(np.ascontiguousarray(pixels), seq=1)


def _bench_scene(frame: Frame) -> FixtureScene:
    dets = [
        Detection(cls=class_by_name("sign-text"), bbox=BBox(200, 100, 360, 180), confidence=0.9),
        Detection(cls=class_by_name("avatar"), bbox=BBox(40, 200, 140, 420), confidence=0.8),
        Detection(cls=class_by_name("portal"), bbox=BBox(480, 220, 600, 430), confidence=0.7),
    ]
    return FixtureScene(
        name="bench",
        detections={frame.seq: dets},
        depth_scripts={frame.seq: DepthScript(kind="gradient", axis="x")},
    )


def run_fixture_bench(
    iterations: int = 100,
    dispatches: int = 60,
    seed: int = 0,
) -> BenchReport:
    """Time every stage against fixture backends. Zero-sized workloads
    produce an empty report."""
    samples: dict[str, list[float]] = {name: [] for name in BENCH_STAGES}
    realized: dict[str, list[float]] = {k.value: [] for k in InteractionKey}

    if iterations > 0:
        frame = _bench_frame(seed)
        scene = _bench_scene(frame)
        detector = FixtureDetectorBackend(scene)
        depther = FixtureDepthBackend(scene)
        samples["detect"] = _time_ms(lambda: detector.detect(frame), iterations)
        samples["edge"] = _time_ms(lambda: detect_pointer(frame), iterations)
        samples["depth"] = _time_ms(lambda: depther.estimate_depth(frame), iterations)

        services = ServiceClient(FixtureServices())
        crop = np.zeros((48, 48, 3), dtype=np.uint8)
        counter = iter(range(10**9))

        def llm_once() -> None:
            services.describe(
                ServiceKind.SCENE_DESCRIBE, crop, context=f"bench {next(counter)}"
            )

        def ocr_once() -> None:
            i = next(counter)
            crop[0, 0, 0] = i % 256
            crop[0, 1, 0] = (i // 256) % 256
            services.ocr(crop)

        def tts_once() -> None:
            services.synthesize(f"bench {next(counter)}", SceneTone.NEUTRAL)

        samples["llm"] = _time_ms(llm_once, iterations)
        samples["ocr"] = _time_ms(ocr_once, iterations)
        samples["tts"] = _time_ms(tts_once, iterations)

    if dispatches > 0:
        frame = _bench_frame(seed)
        scene = _bench_scene(frame)
        services = ServiceClient(FixtureServices())
        sink_count = 0

        def sink(_event: object) -> None:
            nonlocal sink_count
            sink_count += 1

        orch = Orchestrator(services, sink)
        orch.warm_preambles()
        orch.channels.push_latest("frame", frame, frame.seq)
        orch.channels.push_latest(
            "detections", FixtureDetectorBackend(scene).detect(frame), frame.seq
        )
        orch.channels.push_latest(
            "depth", FixtureDepthBackend(scene).estimate_depth(frame), frame.seq
        )
        keys = list(InteractionKey)
        for i in range(dispatches):
            key = keys[i % len(keys)]
            ledger = orch.dispatch(key)
            samples["dispatch"].append(ledger.first_packet_ms)
            realized[key.value].append(realized_latency(ledger))
        orch.close()

    return BenchReport(
        stages=summarize_stages(samples),
        realized_ms={k: tuple(v) for k, v in realized.items() if v},
    )


# --------------------------------------------------------------------------
# Kernel comparison (compiled core vs pure-Python fallback)


def _kernel_workloads(seed: int) -> dict[str, Callable[[object], object]]:
    rng = np.random.default_rng(seed)
    rgb = rng.integers(0, 256, size=(480, 640, 3), dtype=np.uint8)
    xs = rng.integers(0, 640, size=4000).astype(np.int32)
    ys = rng.integers(0, 480, size=4000).astype(np.int32)
    depth = rng.random((480, 640), dtype=np.float32)
    boxes_a = np.sort(rng.uniform(0, 640, size=(40, 4)), axis=1).astype(np.float64)
    boxes_b = np.sort(rng.uniform(0, 640, size=(40, 4)), axis=1).astype(np.float64)
    return {
        "hsv_mask_coords": lambda mod: mod.hsv_mask_coords(rgb, 90.0, 150.0, 0.35, 0.25),
        "line_distances": lambda mod: mod.line_distances(xs, ys, 320.0, 240.0, 0.8, 0.6),
        # detection sub-boxes are small; a full-frame rectangle would
        # benchmark a workload the pipeline never runs
        "box_median": lambda mod: mod.box_median(depth, 300, 200, 347, 247),
        "iou_matrix": lambda mod: mod.iou_matrix(boxes_a, boxes_b),
    }


def kernel_bench(repeats: int = 20, seed: int = 0) -> tuple[StageStats, ...]:
    """Same inputs through both kernel backends; rows named kernel[backend]."""
    workloads = _kernel_workloads(seed)
    backends: list[tuple[str, object]] = [("fallback", _fallback)]
    if _native is not None:
        backends.insert(0, ("native", _native))
    samples: dict[str, list[float]] = {}
    for kernel_name, call in workloads.items():
        for backend_name, module in backends:
            row = f"{kernel_name}[{backend_name}]"
            samples[row] = _time_ms(lambda m=module, c=call: c(m), repeats)
    return summarize_stages(samples)
