"""Engine assembly: frame source, perception workers, orchestrator, outputs.

Two run shapes share the same parts:

* ``Engine`` (serve): an ingest thread publishes frames into the latest-wins
  channels while one worker thread per perception stage recomputes from the
  newest frame.  Keypresses arrive from the websocket server or stdin and are
  serialized by the orchestrator's dispatch lock.
* ``run_replay``: single-threaded and driven by a virtual clock, so the same
  inputs always produce the same transcript bytes.
"""

from __future__ import annotations

import logging
import threading
from pathlib import Path
from typing import Callable, Sequence

from .clock import Clock, SystemClock, VirtualClock
from .config import EngineConfig, PerceptionConfig, ServicesConfig
from .ingest import FrameSource, ImageDirSource, open_source
from .model import Frame, SceneTone, Speech
from .orchestrator import (
    CancelBatch,
    CueBatch,
    InteractionKey,
    NoFrameYet,
    Orchestrator,
    ToneTracker,
)
from .perception import (
    AdapterDepthBackend,
    AdapterDetectorBackend,
    AdapterProcess,
    BackendUnavailable,
    DepthBackend,
    DetectorBackend,
    FixtureDepthBackend,
    FixtureDetectorBackend,
    detect_pointer,
    parse_annotation_file,
)
from .services import FixtureServices, HttpServices, ProviderConfig, ServiceClient
from .spatial import SpatialConfig

log = logging.getLogger(__name__)

# Worker poll interval while waiting for a newer frame.
_IDLE_WAIT_S = 0.002
SHUTDOWN_DEADLINE_S = 2.0

KEY_ALIASES = {
    "cc": InteractionKey.CONTEXT_COMPASS,
    "ss": InteractionKey.SCENE_SWEEP,
    "aa": InteractionKey.AIM_ASSIST,
}


def parse_key_list(spec: str) -> list[InteractionKey | None]:
    """``"cc,ss,aa,-"``: per-frame dispatch plan; ``-`` means no keypress."""
    out: list[InteractionKey | None] = []
    for token in spec.split(","):
        token = token.strip().lower()
        if token == "-":
            out.append(None)
        elif token in KEY_ALIASES:
            out.append(KEY_ALIASES[token])
        else:
            raise ValueError(f"unknown key {token!r}; expected cc, ss, aa, or -")
    if not out:
        raise ValueError("empty key list")
    return out


def build_services(cfg: ServicesConfig, clock: Clock) -> ServiceClient:
    if cfg.mode == "fixture":
        backend = (
            FixtureServices.from_dir(cfg.fixture_dir)
            if cfg.fixture_dir
            else FixtureServices()
        )
    else:
        backend = HttpServices(
            ProviderConfig(
                endpoint=cfg.endpoint,
                api_key_env=cfg.api_key_env,
                model=cfg.model,
                timeout_s=cfg.timeout_s,
            )
        )
    return ServiceClient(
        backend, timeout_s=cfg.timeout_s, clock=lambda: clock.now_ms() / 1000.0
    )


def build_perception(
    cfg: PerceptionConfig,
) -> tuple[DetectorBackend, DepthBackend, AdapterProcess | None]:
    """Instantiate the detector and depth backends; the adapter subprocess, if
    any, is returned so the engine can own its shutdown."""
    process: AdapterProcess | None = None
    if "adapter" in (cfg.detector, cfg.depth):
        process = AdapterProcess(list(cfg.adapter_cmd))
    scene = None
    if "fixture" in (cfg.detector, cfg.depth):
        assert cfg.annotations is not None  # enforced by config validation
        scene = parse_annotation_file(cfg.annotations)
    if cfg.detector == "fixture":
        detector: DetectorBackend = FixtureDetectorBackend(scene, cfg.conf_threshold)
    else:
        detector = AdapterDetectorBackend(
            process, conf_threshold=cfg.conf_threshold, letterboxed=cfg.adapter_letterboxed
        )
    if cfg.depth == "fixture":
        depther: DepthBackend = FixtureDepthBackend(scene)
    else:
        depther = AdapterDepthBackend(process)
    return detector, depther, process


# --------------------------------------------------------------------------
# Transcripts

TRANSCRIPT_HEADER = "time_ms\tkind\tazimuth\tgain\tpayload_summary"


def _summary_text(text: str) -> str:
    return " ".join(text.split()) or "(empty)"


class TranscriptRecorder:
    """Batch sink that flattens emitted events into transcript rows.

    Row time is the emission clock time plus the cue's start offset within
    its batch, so the transcript reads as a playback schedule.
    """

    def __init__(self, clock: Clock) -> None:
        self._clock = clock
        self._rows: list[tuple[float, str, str, str, str]] = []
        self._lock = threading.Lock()

    def __call__(self, event: CueBatch | CancelBatch) -> None:
        now = self._clock.now_ms()
        with self._lock:
            if isinstance(event, CancelBatch):
                self._rows.append((now, "cancel", "-", "-", f"batch {event.batch_id}"))
                return
            for placed in event.cues:
                payload = placed.cue.payload
                if isinstance(payload, Speech):
                    kind, summary = "speech", _summary_text(payload.text)
                else:
                    kind, summary = "effect", payload.effect_id
                self._rows.append(
                    (
                        now + placed.start_ms,
                        kind,
                        f"{placed.cue.azimuth:.4f}",
                        f"{placed.cue.gain:.4f}",
                        summary,
                    )
                )

    def text(self) -> str:
        with self._lock:
            lines = [TRANSCRIPT_HEADER]
            for time_ms, kind, azimuth, gain, summary in self._rows:
                lines.append(f"{time_ms:.0f}\t{kind}\t{azimuth}\t{gain}\t{summary}")
        return "\n".join(lines) + "\n"

    def write(self, path: str | Path) -> None:
        Path(path).write_text(self.text(), encoding="utf-8")


# --------------------------------------------------------------------------
# Serve-mode engine


class Engine:
    """Live pipeline: ingest and perception threads around one orchestrator."""

    def __init__(
        self,
        config: EngineConfig,
        *,
        clock: Clock | None = None,
        extra_sinks: Sequence[Callable[[CueBatch | CancelBatch], None]] = (),
    ) -> None:
        self.config = config
        self.clock = clock if clock is not None else SystemClock()
        self._sinks: list[Callable[[CueBatch | CancelBatch], None]] = list(extra_sinks)
        self.services = build_services(config.services, self.clock)
        self._detector, self._depther, self._adapter = build_perception(config.perception)
        self.orchestrator = Orchestrator(
            self.services, self._fanout, spatial=config.spatial, clock=self.clock
        )
        self._tone_tracker = ToneTracker(
            self.services, self.clock, scene_hint=config.services.scene_name
        )
        self._source: FrameSource | None = None
        self._threads: list[threading.Thread] = []
        self._stop = threading.Event()
        self._stage_down: dict[str, bool] = {}

    def _fanout(self, event: CueBatch | CancelBatch) -> None:
        for sink in self._sinks:
            sink(event)

    def add_sink(self, sink: Callable[[CueBatch | CancelBatch], None]) -> None:
        self._sinks.append(sink)

    def dispatch(self, key: InteractionKey) -> None:
        try:
            self.orchestrator.dispatch(key)
        except Exception:
            log.exception("dispatch %s failed", key.value)

    # -- lifecycle --

    def start(self) -> None:
        self.orchestrator.warm_preambles()
        cfg = self.config.ingestion
        self._source = open_source(
            cfg.mode, path=cfg.path, device=cfg.device, clock=self.clock
        )
        paced = cfg.mode != "live-camera"
        self._threads = [
            threading.Thread(target=self._ingest, args=(paced,), name="ingest", daemon=True),
            threading.Thread(
                target=self._worker,
                args=("detections", self._detect_and_guard),
                name="detect",
                daemon=True,
            ),
            threading.Thread(
                target=self._worker,
                args=("depth", self._depther.estimate_depth),
                name="depth",
                daemon=True,
            ),
            threading.Thread(
                target=self._worker,
                args=("pointer", self._find_pointer),
                name="pointer",
                daemon=True,
            ),
            threading.Thread(
                target=self._worker,
                args=("tone", self._tone_tracker.tick),
                name="tone",
                daemon=True,
            ),
        ]
        for thread in self._threads:
            thread.start()

    def stop(self) -> None:
        self._stop.set()
        if self._source is not None:
            self._source.close()
        deadline = self.clock.now_ms() + SHUTDOWN_DEADLINE_S * 1000.0
        for thread in self._threads:
            remaining = (deadline - self.clock.now_ms()) / 1000.0
            thread.join(timeout=max(0.0, remaining))
        stuck = [t.name for t in self._threads if t.is_alive()]
        if stuck:
            # Daemon threads; report and move on rather than hang shutdown.
            log.warning("threads still running at shutdown deadline: %s", stuck)
        self.orchestrator.close()
        if self._adapter is not None:
            self._adapter.close()

    # -- threads --

    def _ingest(self, paced: bool) -> None:
        assert self._source is not None
        interval_s = 1.0 / self.config.ingestion.fps
        try:
            for frame in self._source:
                if self._stop.is_set():
                    break
                self.orchestrator.channels.push_latest("frame", frame, frame.seq)
                if paced:
                    self.clock.sleep(interval_s)
        except Exception:
            log.exception("frame source failed")
        log.info("frame source finished")

    def _detect_and_guard(self, frame: Frame) -> list:
        return self._detector.detect(frame)

    def _find_pointer(self, frame: Frame):
        return detect_pointer(frame, self.config.perception.pointer)

    def _worker(self, channel: str, fn: Callable[[Frame], object]) -> None:
        last_seq = -1
        while not self._stop.is_set():
            slot = self.orchestrator.channels.frame.read()
            if slot is None or slot[1] == last_seq:
                self._stop.wait(_IDLE_WAIT_S)
                continue
            frame, seq, _ = slot
            last_seq = seq
            try:
                value = fn(frame)
            except BackendUnavailable as exc:
                if not self._stage_down.get(channel):
                    log.warning("%s backend unavailable: %s", channel, exc)
                    self._stage_down[channel] = True
                continue
            except Exception:
                log.exception("%s stage failed on frame %d", channel, seq)
                continue
            if self._stage_down.get(channel):
                log.info("%s backend recovered", channel)
                self._stage_down[channel] = False
            self.orchestrator.channels.push_latest(channel, value, seq)
            if channel == "detections":
                try:
                    snap = self.orchestrator.channels.snapshot()
                except NoFrameYet:
                    continue
                self.orchestrator.safeguard_tick(snap)


# --------------------------------------------------------------------------
# Replay


def run_replay(
    frames_dir: str | Path,
    script_path: str | Path,
    *,
    keys: Sequence[InteractionKey | None] = (
        InteractionKey.CONTEXT_COMPASS,
        InteractionKey.SCENE_SWEEP,
        InteractionKey.AIM_ASSIST,
    ),
    fps: float = 10.0,
    scene_name: str | None = None,
    conf_threshold: float = 0.25,
    spatial: SpatialConfig | None = None,
    fixture_dir: str | Path | None = None,
    pointer_profile=None,
) -> str:
    """Deterministic offline run; returns the transcript text.

    Frames advance a virtual clock by a whole number of milliseconds per
    frame; fixture services answer instantly, so every timestamp (and thus
    the whole transcript) is a pure function of the inputs.
    """
    if fps <= 0:
        raise ValueError("fps must be positive")
    clock = VirtualClock()
    interval_ms = max(1, round(1000.0 / fps))
    scene = parse_annotation_file(script_path, name=scene_name)
    backend = (
        FixtureServices.from_dir(fixture_dir) if fixture_dir else FixtureServices()
    )
    services = ServiceClient(backend, clock=lambda: clock.now_ms() / 1000.0)
    recorder = TranscriptRecorder(clock)
    orch = Orchestrator(services, recorder, spatial=spatial, clock=clock)
    orch.warm_preambles()
    tracker = ToneTracker(services, clock, scene_hint=scene.name)
    detector = FixtureDetectorBackend(scene, conf_threshold)
    depther = FixtureDepthBackend(scene)
    source = ImageDirSource(frames_dir, clock=clock)
    try:
        for i, frame in enumerate(source):
            channels = orch.channels
            channels.push_latest("frame", frame, frame.seq)
            channels.push_latest("detections", detector.detect(frame), frame.seq)
            try:
                channels.push_latest("depth", depther.estimate_depth(frame), frame.seq)
            except BackendUnavailable:
                pass
            if pointer_profile is not None:
                ray = detect_pointer(frame, pointer_profile)
            else:
                ray = detect_pointer(frame)
            channels.push_latest("pointer", ray, frame.seq)
            channels.push_latest("tone", tracker.tick(frame), frame.seq)
            orch.safeguard_tick(channels.snapshot())
            key = keys[i % len(keys)]
            if key is not None:
                orch.dispatch(key)
            clock.advance_ms(interval_ms)
    finally:
        source.close()
        orch.close()
    return recorder.text()
