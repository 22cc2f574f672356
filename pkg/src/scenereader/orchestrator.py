"""Latest-wins pipeline state, keypress dispatch, and proactive safety.

Perception workers push their newest results into channels; a dispatch takes
an atomic snapshot, speaks the interaction's preamble immediately, then
builds the content cues (service calls run on a small worker pool so a slow
OCR round-trip can never delay the preamble).  Every dispatch is accounted
in a latency ledger.
"""

from __future__ import annotations

import itertools
import math
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Generic, Mapping, Sequence, TypeVar, Union

import numpy as np

from .clock import Clock, SystemClock
from .model import (
    DEFAULT_TONE,
    BBox,
    DepthMap,
    Detection,
    Effect,
    Frame,
    PointerRay,
    SceneTone,
    SpatialCue,
    Speech,
    bbox_center,
)
from .services import AudioClip, ServiceClient, ServiceFailure, ServiceKind
from .spatial import (
    SpatialConfig,
    near_pointer,
    order_sweep,
    sample_depth,
    schedule_sweep,
    to_spatial,
)


class NoFrameYet(Exception):
    """Snapshot requested before any frame entered the pipeline."""


class InteractionKey(Enum):
    CONTEXT_COMPASS = "ContextCompass"
    SCENE_SWEEP = "SceneSweep"
    AIM_ASSIST = "AimAssist"


PREAMBLES: Mapping[InteractionKey, str] = {
    InteractionKey.CONTEXT_COMPASS: "Describing Scene",
    InteractionKey.SCENE_SWEEP: "Reading all objects",
    InteractionKey.AIM_ASSIST: "Enhanced Object Reading",
}

NO_SCENE_TEXT = "No scene available"
NO_OBJECTS_TEXT = "No objects found"
NOTHING_NEAR_TEXT = "Nothing to describe"

WARNING_EFFECT_ID = "boundary-warning"
FALLBACK_BEEP_EFFECT_ID = "beep"
# Nominal playback length of an effect, used only for timeline accounting.
EFFECT_NOMINAL_MS = 400

SAFEGUARD_CONF_GATE = 0.5
SAFEGUARD_COOLDOWN_MS = 3000.0
_SAFETY_PRIORITY = ("out of bounds", "guardian")

# Classes whose content is text to be read, and the spoken label prefix for
# each ("Sign: Expressions").
TEXT_CLASS_PREFIX: Mapping[str, str] = {
    "sign-text": "Sign",
    "sign-graphic": "Sign",
    "ui-text": "Text",
    "ui-graphic": "Graphic",
    "chat box": "Chat box",
    "menu": "Menu",
}
_GRAPHIC_CLASSES = frozenset({"sign-graphic", "ui-graphic"})
_HAND_CLASSES = frozenset({"hand", "controller"})

_DEPTH_WHEN_UNKNOWN = 0.5

T = TypeVar("T")


# --------------------------------------------------------------------------
# Channels


class LatestChannel(Generic[T]):
    """Single-slot mailbox: a new value replaces the old one, and a push with
    a sequence number lower than the current one is discarded."""

    def __init__(self, lock: threading.Lock, clock: Clock) -> None:
        self._lock = lock
        self._clock = clock
        self._value: T | None = None
        self._seq = -1
        self._pushed_ms = 0.0
        self._has_value = False

    def push(self, value: T, seq: int) -> bool:
        with self._lock:
            if self._has_value and seq < self._seq:
                return False
            self._value = value
            self._seq = seq
            self._pushed_ms = self._clock.now_ms()
            self._has_value = True
            return True

    def read_locked(self) -> tuple[T, int, float] | None:
        """Caller must hold the shared lock."""
        if not self._has_value:
            return None
        return (self._value, self._seq, self._pushed_ms)  # type: ignore[return-value]

    def read(self) -> tuple[T, int, float] | None:
        with self._lock:
            return self.read_locked()


_CHANNEL_NAMES = ("frame", "detections", "depth", "pointer", "tone")


@dataclass(frozen=True, slots=True)
class PipelineSnapshot:
    """Atomic view of the newest pipeline outputs.

    ``seqs`` carries, per channel, the frame sequence each part was computed
    from; ``staleness_ms`` is the channel's age at snapshot time.  Channels
    that never received a value are absent from both maps.
    """

    frame: Frame
    detections: tuple[Detection, ...]
    depth: DepthMap | None
    pointer: PointerRay | None
    tone: SceneTone
    seqs: Mapping[str, int]
    staleness_ms: Mapping[str, float]

    def __post_init__(self) -> None:
        for name, age in self.staleness_ms.items():
            if age < 0:
                raise ValueError(f"staleness for {name} is negative: {age}")


class Channels:
    """The five latest-wins channels behind one lock, so a snapshot is a
    single atomic read across all of them."""

    def __init__(self, clock: Clock) -> None:
        self._clock = clock
        self._lock = threading.Lock()
        self.frame: LatestChannel[Frame] = LatestChannel(self._lock, clock)
        self.detections: LatestChannel[list[Detection]] = LatestChannel(self._lock, clock)
        self.depth: LatestChannel[DepthMap] = LatestChannel(self._lock, clock)
        self.pointer: LatestChannel[PointerRay | None] = LatestChannel(self._lock, clock)
        self.tone: LatestChannel[SceneTone] = LatestChannel(self._lock, clock)

    def push_latest(self, channel: str, value: object, seq: int) -> bool:
        if channel not in _CHANNEL_NAMES:
            raise ValueError(f"unknown channel {channel!r}")
        return getattr(self, channel).push(value, seq)

    def snapshot(self) -> PipelineSnapshot:
        now = self._clock.now_ms()
        with self._lock:
            frame_slot = self.frame.read_locked()
            if frame_slot is None:
                raise NoFrameYet("no frame has entered the pipeline")
            slots = {
                "frame": frame_slot,
                "detections": self.detections.read_locked(),
                "depth": self.depth.read_locked(),
                "pointer": self.pointer.read_locked(),
                "tone": self.tone.read_locked(),
            }
        seqs: dict[str, int] = {}
        staleness: dict[str, float] = {}
        for name, slot in slots.items():
            if slot is None:
                continue
            seqs[name] = slot[1]
            staleness[name] = max(0.0, now - slot[2])
        det_slot = slots["detections"]
        depth_slot = slots["depth"]
        pointer_slot = slots["pointer"]
        tone_slot = slots["tone"]
        return PipelineSnapshot(
            frame=frame_slot[0],
            detections=tuple(det_slot[0]) if det_slot is not None else (),
            depth=depth_slot[0] if depth_slot is not None else None,
            pointer=pointer_slot[0] if pointer_slot is not None else None,
            tone=tone_slot[0] if tone_slot is not None else DEFAULT_TONE,
            seqs=seqs,
            staleness_ms=staleness,
        )


# --------------------------------------------------------------------------
# Latency accounting


@dataclass(frozen=True, slots=True)
class LatencyLedger:
    """One dispatch, accounted: stage durations, preamble length, total.

    ``stages`` holds disjoint engine-side intervals (snapshot, preamble
    emission, content build).  ``total_ms`` runs from keypress to the moment
    content can start playing, i.e. the later of preamble end and content
    emission, so it is never less than the sum of the recorded stages.
    ``first_packet_ms`` is keypress to the first packet leaving the engine.
    """

    key: InteractionKey | None
    preamble_ms: float
    total_ms: float
    stages: Mapping[str, float] = field(default_factory=dict)
    first_packet_ms: float = 0.0

    def __post_init__(self) -> None:
        if self.preamble_ms < 0 or self.total_ms < 0 or self.first_packet_ms < 0:
            raise ValueError("durations must be non-negative")
        if any(v < 0 for v in self.stages.values()):
            raise ValueError("stage durations must be non-negative")
        if self.total_ms + 1e-6 < sum(self.stages.values()):
            raise ValueError("total is less than the recorded stages")


def realized_latency(ledger: LatencyLedger) -> float:
    """Wait the user perceives beyond the preamble, clamped at zero."""
    return max(0.0, ledger.total_ms - ledger.preamble_ms)


# --------------------------------------------------------------------------
# Cue batches handed to transport


@dataclass(frozen=True, slots=True)
class PlacedCue:
    start_ms: int
    cue: SpatialCue
    clip: AudioClip | None = None

    @property
    def duration_ms(self) -> int:
        return self.clip.duration_ms if self.clip is not None else EFFECT_NOMINAL_MS


@dataclass(frozen=True, slots=True)
class CueBatch:
    batch_id: int
    tone: SceneTone
    cues: tuple[PlacedCue, ...]


@dataclass(frozen=True, slots=True)
class CancelBatch:
    batch_id: int


BatchEvent = Union[CueBatch, CancelBatch]
BatchSink = Callable[[BatchEvent], None]


# --------------------------------------------------------------------------
# Tone tracking


class ToneTracker:
    """Refresh the scene tone at most every ``refresh_s`` seconds, or sooner
    when mean frame brightness shifts by more than ``shift`` (relative).
    A failed classification holds the previous tone until the next cadence.
    """

    def __init__(
        self,
        services: ServiceClient,
        clock: Clock,
        *,
        scene_hint: str = "",
        refresh_s: float = 10.0,
        shift: float = 0.25,
    ) -> None:
        self._services = services
        self._clock = clock
        self.scene_hint = scene_hint
        self._refresh_ms = refresh_s * 1000.0
        self._shift = shift
        self._tone = DEFAULT_TONE
        self._last_attempt_ms: float | None = None
        self._last_brightness: float | None = None

    @property
    def tone(self) -> SceneTone:
        return self._tone

    def tick(self, frame: Frame) -> SceneTone:
        brightness = float(frame.pixels.mean())
        now = self._clock.now_ms()
        due = (
            self._last_attempt_ms is None
            or now - self._last_attempt_ms >= self._refresh_ms
        )
        shifted = (
            self._last_brightness is not None
            and abs(brightness - self._last_brightness)
            > self._shift * max(self._last_brightness, 1e-6)
        )
        if due or shifted:
            self._last_attempt_ms = now
            try:
                self._tone = self._services.classify_tone(frame, self.scene_hint)
            except ServiceFailure:
                pass
        self._last_brightness = brightness
        return self._tone


# --------------------------------------------------------------------------
# Helpers


def _third(cx: float, frame_w: float) -> str:
    if cx < frame_w / 3.0:
        return "left"
    if cx < 2.0 * frame_w / 3.0:
        return "center"
    return "right"


def _crop(frame: Frame, box: BBox) -> np.ndarray:
    c = box.clamped(frame.width, frame.height)
    x0 = min(int(math.floor(c.x_min)), frame.width - 1)
    y0 = min(int(math.floor(c.y_min)), frame.height - 1)
    x1 = max(int(math.ceil(c.x_max)), x0 + 1)
    y1 = max(int(math.ceil(c.y_max)), y0 + 1)
    return frame.pixels[y0 : min(y1, frame.height), x0 : min(x1, frame.width)]


def _detection_summary(dets: Sequence[Detection], frame_w: float, limit: int = 5) -> str:
    ranked = sorted(
        dets, key=lambda d: (-d.confidence, d.cls.id, d.bbox.x_min, d.bbox.y_min)
    )
    parts = []
    for d in ranked[:limit]:
        cx, _ = bbox_center(d.bbox)
        parts.append(f"{d.cls.name} {_third(cx, frame_w)}")
    return ", ".join(parts)


def compass_fallback_text(dets: Sequence[Detection], frame_w: float) -> str:
    summary = _detection_summary(dets, frame_w)
    head = f"{len(dets)} objects:"
    return f"{head} {summary}" if summary else head


# --------------------------------------------------------------------------
# Orchestrator


class Orchestrator:
    """Owns dispatch. Construct one per engine; perception workers feed
    ``channels`` concurrently while dispatch serializes on its own lock."""

    def __init__(
        self,
        services: ServiceClient,
        sink: BatchSink,
        *,
        spatial: SpatialConfig | None = None,
        clock: Clock | None = None,
        max_workers: int = 4,
        safeguard_conf: float = SAFEGUARD_CONF_GATE,
        safeguard_cooldown_ms: float = SAFEGUARD_COOLDOWN_MS,
        compass_memo_s: float = 30.0,
    ) -> None:
        self._services = services
        self._sink = sink
        self._spatial = spatial if spatial is not None else SpatialConfig()
        self._clock = clock if clock is not None else SystemClock()
        self.channels = Channels(self._clock)
        self._pool = ThreadPoolExecutor(max_workers=max_workers, thread_name_prefix="svc")
        self._dispatch_lock = threading.Lock()
        self._batch_ids = itertools.count(1)
        self._active: list[tuple[int, float]] = []
        self._ledgers: list[LatencyLedger] = []
        self._safeguard_conf = safeguard_conf
        self._safeguard_cooldown_ms = safeguard_cooldown_ms
        self._last_warning_ms: float | None = None
        self._compass_memo: dict[tuple[str, SceneTone], tuple[float, str]] = {}
        self._compass_memo_ms = compass_memo_s * 1000.0

    # -- lifecycle ---------------------------------------------------------

    def warm_preambles(self) -> None:
        """Synthesize every preamble in every tone so a dispatch never waits
        on TTS before its first packet."""
        texts = list(PREAMBLES.values()) + [NO_SCENE_TEXT, NO_OBJECTS_TEXT, NOTHING_NEAR_TEXT]
        for tone in SceneTone:
            for text in texts:
                self._services.synthesize(text, tone)

    def close(self) -> None:
        self._pool.shutdown(wait=False, cancel_futures=True)

    def ledgers(self) -> list[LatencyLedger]:
        with self._dispatch_lock:
            return list(self._ledgers)

    # -- dispatch ------------------------------------------------------------

    def dispatch(self, key: InteractionKey) -> LatencyLedger:
        with self._dispatch_lock:
            pressed = self._clock.now_ms()
            self._cancel_active()
            try:
                snap = self.channels.snapshot()
            except NoFrameYet:
                ledger = self._dispatch_no_scene(key, pressed)
                self._ledgers.append(ledger)
                return ledger
            after_snapshot = self._clock.now_ms()

            preamble_clip = self._speak(PREAMBLES[key], snap.tone)
            pre_cue = self._centered_cue(PREAMBLES[key], snap.tone, preamble_clip)
            self._emit([pre_cue], snap.tone)
            after_preamble = self._clock.now_ms()

            if key is InteractionKey.CONTEXT_COMPASS:
                cues = self.context_compass(snap)
            elif key is InteractionKey.SCENE_SWEEP:
                cues = self.scene_sweep(snap)
            else:
                cues = self.aim_assist(snap)
            self._emit(cues, snap.tone)
            done = self._clock.now_ms()

            preamble_ms = float(preamble_clip.duration_ms) if preamble_clip else 0.0
            content_elapsed = done - pressed
            ledger = LatencyLedger(
                key=key,
                preamble_ms=preamble_ms,
                total_ms=max(preamble_ms, content_elapsed),
                stages={
                    "snapshot": after_snapshot - pressed,
                    "preamble": after_preamble - after_snapshot,
                    "content": done - after_preamble,
                },
                first_packet_ms=after_preamble - pressed,
            )
            self._ledgers.append(ledger)
            return ledger

    def _dispatch_no_scene(self, key: InteractionKey, pressed: float) -> LatencyLedger:
        clip = self._speak(NO_SCENE_TEXT, DEFAULT_TONE)
        self._emit([self._centered_cue(NO_SCENE_TEXT, DEFAULT_TONE, clip)], DEFAULT_TONE)
        done = self._clock.now_ms()
        return LatencyLedger(
            key=key,
            preamble_ms=0.0,
            total_ms=done - pressed,
            stages={"content": done - pressed},
            first_packet_ms=done - pressed,
        )

    # -- interactions --------------------------------------------------------

    def context_compass(self, snap: PipelineSnapshot) -> list[PlacedCue]:
        summary = _detection_summary(snap.detections, snap.frame.width, limit=5)
        text = self._compass_text(snap, summary)
        clip = self._speak(text, snap.tone)
        return [self._centered_cue(text, snap.tone, clip)]

    def _compass_text(self, snap: PipelineSnapshot, summary: str) -> str:
        # Identical detection summaries in the same tone within the memo
        # window replay the previous description without another LLM call.
        memo_key = (summary, snap.tone)
        now = self._clock.now_ms()
        hit = self._compass_memo.get(memo_key)
        if hit is not None and now - hit[0] <= self._compass_memo_ms:
            return hit[1]
        try:
            text = self._services.describe(
                ServiceKind.SCENE_DESCRIBE, snap.frame.pixels, context=summary
            )
        except ServiceFailure:
            text = ""
        if not text:
            return compass_fallback_text(snap.detections, snap.frame.width)
        self._compass_memo[memo_key] = (now, text)
        return text

    def scene_sweep(self, snap: PipelineSnapshot) -> list[PlacedCue]:
        ordered = order_sweep(snap.detections)
        if not ordered:
            clip = self._speak(NO_OBJECTS_TEXT, snap.tone)
            return [self._centered_cue(NO_OBJECTS_TEXT, snap.tone, clip)]
        texts = list(self._pool.map(lambda d: self._sweep_text(snap, d), ordered))
        return self._placed_readout(snap, ordered, texts)

    def _sweep_text(self, snap: PipelineSnapshot, det: Detection) -> str:
        name = det.cls.name
        prefix = TEXT_CLASS_PREFIX.get(name)
        if prefix is None:
            return name
        crop = _crop(snap.frame, det.bbox)
        text = ""
        try:
            text = self._services.ocr(crop)
        except ServiceFailure:
            text = ""
        if not text and name in _GRAPHIC_CLASSES:
            try:
                text = self._services.describe(ServiceKind.ICON_DESCRIBE, crop, context=name)
            except ServiceFailure:
                text = ""
        return f"{prefix}: {text}" if text else name

    def aim_assist(self, snap: PipelineSnapshot) -> list[PlacedCue]:
        if snap.pointer is not None:
            targets = near_pointer(snap.detections, snap.pointer, self._spatial)
        else:
            hands = [d for d in snap.detections if d.cls.name in _HAND_CLASSES]
            others = [d for d in snap.detections if d.cls.name not in _HAND_CLASSES]
            touching = [
                d
                for d in others
                if any(d.bbox.intersects(h.bbox) for h in hands)
            ]
            targets = order_sweep(touching)
        if not targets:
            clip = self._speak(NOTHING_NEAR_TEXT, snap.tone)
            return [self._centered_cue(NOTHING_NEAR_TEXT, snap.tone, clip)]
        texts = list(self._pool.map(lambda d: self._detail_text(snap, d), targets))
        return self._placed_readout(snap, targets, texts)

    def _detail_text(self, snap: PipelineSnapshot, det: Detection) -> str:
        name = det.cls.name
        crop = _crop(snap.frame, det.bbox)
        if name in TEXT_CLASS_PREFIX:
            return self._sweep_text(snap, det)
        try:
            text = self._services.describe(ServiceKind.ICON_DESCRIBE, crop, context=name)
        except ServiceFailure:
            text = ""
        return text if text else name

    def safeguard_tick(self, snap: PipelineSnapshot) -> CueBatch | None:
        hazards = [
            d
            for d in snap.detections
            if d.cls.name in _SAFETY_PRIORITY and d.confidence >= self._safeguard_conf
        ]
        if not hazards:
            return None
        now = self._clock.now_ms()
        if (
            self._last_warning_ms is not None
            and now - self._last_warning_ms < self._safeguard_cooldown_ms
        ):
            return None
        for name in _SAFETY_PRIORITY:
            ranked = [d for d in hazards if d.cls.name == name]
            if ranked:
                worst = max(ranked, key=lambda d: d.confidence)
                break
        geometry = to_spatial(
            worst.bbox, self._depth_at(snap, worst.bbox), snap.frame.width, self._spatial
        )
        cue = SpatialCue(
            azimuth=geometry.azimuth,
            gain=geometry.gain,
            distance=geometry.distance,
            payload=Effect(WARNING_EFFECT_ID),
            tone=snap.tone,
            order_index=0,
        )
        batch = self._emit([PlacedCue(start_ms=0, cue=cue)], snap.tone)
        self._last_warning_ms = now
        return batch

    # -- plumbing --------------------------------------------------------------

    def _placed_readout(
        self,
        snap: PipelineSnapshot,
        targets: Sequence[Detection],
        texts: Sequence[str],
    ) -> list[PlacedCue]:
        cues: list[SpatialCue] = []
        clips: list[AudioClip | None] = []
        durations: list[int] = []
        for i, (det, text) in enumerate(zip(targets, texts)):
            geometry = to_spatial(
                det.bbox, self._depth_at(snap, det.bbox), snap.frame.width, self._spatial
            )
            clip = self._speak(text, snap.tone)
            if clip is None:
                payload: Speech | Effect = Effect(FALLBACK_BEEP_EFFECT_ID)
            else:
                payload = Speech(text)
            cues.append(
                SpatialCue(
                    azimuth=geometry.azimuth,
                    gain=geometry.gain,
                    distance=geometry.distance,
                    payload=payload,
                    tone=snap.tone,
                    order_index=i,
                )
            )
            clips.append(clip)
            durations.append(clip.duration_ms if clip else EFFECT_NOMINAL_MS)
        timeline = schedule_sweep(cues, durations, self._spatial)
        return [
            PlacedCue(start_ms=start, cue=cue, clip=clips[idx])
            for idx, (start, cue) in enumerate(timeline)
        ]

    def _depth_at(self, snap: PipelineSnapshot, box: BBox) -> float:
        if snap.depth is None:
            return _DEPTH_WHEN_UNKNOWN
        return sample_depth(snap.depth, box)

    def _speak(self, text: str, tone: SceneTone) -> AudioClip | None:
        try:
            return self._services.synthesize(text, tone)
        except ServiceFailure:
            return None

    def _centered_cue(
        self, text: str, tone: SceneTone, clip: AudioClip | None
    ) -> PlacedCue:
        payload: Speech | Effect
        payload = Speech(text) if clip is not None else Effect(FALLBACK_BEEP_EFFECT_ID)
        cue = SpatialCue(
            azimuth=0.0, gain=1.0, distance=0.0, payload=payload, tone=tone, order_index=0
        )
        return PlacedCue(start_ms=0, cue=cue, clip=clip)

    def _emit(self, cues: Sequence[PlacedCue], tone: SceneTone) -> CueBatch:
        batch = CueBatch(batch_id=next(self._batch_ids), tone=tone, cues=tuple(cues))
        self._sink(batch)
        now = self._clock.now_ms()
        end = now + max((pc.start_ms + pc.duration_ms for pc in cues), default=0)
        self._active.append((batch.batch_id, end))
        return batch

    def _cancel_active(self) -> None:
        now = self._clock.now_ms()
        for batch_id, end in self._active:
            if end > now:
                self._sink(CancelBatch(batch_id))
        self._active = []
