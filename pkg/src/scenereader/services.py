"""Clients for OCR, scene/icon description, tone classification, and TTS.

Two interchangeable backends exist: :class:`FixtureServices` answers from a
content-addressed store (deterministic, sub-millisecond, used by replay and
tests) and :class:`HttpServices` bridges to a hosted provider over a small
JSON protocol.  :class:`ServiceClient` wraps either with a TTL cache, per-kind
timeouts, a single retry for OCR, and latency budget alarms.
"""

from __future__ import annotations

import base64
import enum
import hashlib
import json
import logging
import struct
import threading
import time
import urllib.request
import wave
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Mapping, Protocol, Union, runtime_checkable

import numpy as np

from .model import DEFAULT_TONE, Frame, SceneTone

log = logging.getLogger("scenereader.services")

SAMPLE_RATE_HZ = 48_000
SAMPLES_PER_MS = 48
FIXTURE_MS_PER_WORD = 60

DESCRIPTION_CHAR_LIMIT = 280

# Live-call means used as alarm baselines; a call slower than 3x its
# baseline is logged as over budget.
OCR_BASELINE_S = 1.23
DESCRIBE_BASELINE_S = 1.69
SYNTH_BASELINE_S = 0.48
_ALARM_FACTOR = 3.0

DEFAULT_TIMEOUT_S = 3.0


class ServiceKind(enum.Enum):
    OCR = "Ocr"
    ICON_DESCRIBE = "IconDescribe"
    SCENE_DESCRIBE = "SceneDescribe"
    TONE_CLASSIFY = "ToneClassify"
    SYNTHESIZE = "Synthesize"


_IMAGE_KINDS = frozenset(
    {
        ServiceKind.OCR,
        ServiceKind.ICON_DESCRIBE,
        ServiceKind.SCENE_DESCRIBE,
        ServiceKind.TONE_CLASSIFY,
    }
)

_DESCRIBE_KINDS = frozenset({ServiceKind.ICON_DESCRIBE, ServiceKind.SCENE_DESCRIBE})

# Cache lifetimes. Text on signs rarely changes, so OCR results live long;
# tone and descriptions go stale with the scene.
CACHE_TTL_S: Mapping[ServiceKind, float] = {
    ServiceKind.OCR: 600.0,
    ServiceKind.ICON_DESCRIBE: 30.0,
    ServiceKind.SCENE_DESCRIBE: 30.0,
    ServiceKind.TONE_CLASSIFY: 30.0,
    ServiceKind.SYNTHESIZE: 30.0,
}


class ServiceFailure(Exception):
    """A service call timed out or the transport failed."""


def image_payload(image: np.ndarray, context: str = "") -> bytes:
    """Request payload for an image kind: context text, NUL, dims, raw pixels.

    The context rides in the payload so it participates in the cache key; a
    scene description grounded in a different detection list must not hit the
    cache entry of the old one.
    """
    arr = np.ascontiguousarray(image)
    if arr.size == 0:
        raise ValueError("image payload requires a non-empty crop")
    h, w = int(arr.shape[0]), int(arr.shape[1])
    if h <= 0 or w <= 0:
        raise ValueError("crop dimensions must be positive")
    header = struct.pack("<II", w, h)
    return context.encode("utf-8") + b"\x00" + header + arr.tobytes()


def payload_context(payload: bytes) -> str:
    """Context text embedded by :func:`image_payload` (empty for text kinds)."""
    head, sep, _ = payload.partition(b"\x00")
    if not sep:
        return ""
    return head.decode("utf-8", errors="replace")


@dataclass(frozen=True, slots=True)
class ServiceRequest:
    kind: ServiceKind
    payload: bytes
    tone: SceneTone | None = None

    def __post_init__(self) -> None:
        if self.kind in _IMAGE_KINDS and len(self.payload) == 0:
            raise ValueError(f"{self.kind.value} request requires image bytes")
        if self.kind is ServiceKind.SYNTHESIZE:
            if self.tone is None:
                raise ValueError("Synthesize request requires a tone")
        elif self.tone is not None:
            raise ValueError("tone is only valid on Synthesize requests")


def request_key(request: ServiceRequest) -> str:
    h = hashlib.sha256()
    h.update(request.kind.value.encode("ascii"))
    h.update(b"\x00")
    h.update(request.payload)
    h.update(b"\x00")
    h.update(b"" if request.tone is None else request.tone.value.encode("ascii"))
    return h.hexdigest()


@dataclass(frozen=True, slots=True)
class AudioClip:
    """PCM 16-bit mono 48 kHz audio, duration accounted in whole milliseconds."""

    pcm: bytes
    duration_ms: int

    def __post_init__(self) -> None:
        if len(self.pcm) % 2 != 0:
            raise ValueError("pcm must be whole 16-bit samples")
        if self.num_samples != self.duration_ms * SAMPLES_PER_MS:
            raise ValueError(
                f"duration {self.duration_ms} ms does not match "
                f"{self.num_samples} samples at {SAMPLE_RATE_HZ} Hz"
            )

    @property
    def num_samples(self) -> int:
        return len(self.pcm) // 2

    @classmethod
    def silence(cls, duration_ms: int) -> AudioClip:
        return cls(pcm=bytes(duration_ms * SAMPLES_PER_MS * 2), duration_ms=duration_ms)

    @classmethod
    def from_pcm(cls, pcm: bytes) -> AudioClip:
        """Wrap raw samples, zero-padding up to the next whole millisecond."""
        if len(pcm) % 2 != 0:
            raise ValueError("pcm must be whole 16-bit samples")
        samples = len(pcm) // 2
        duration_ms = -(-samples // SAMPLES_PER_MS)
        pad = duration_ms * SAMPLES_PER_MS - samples
        return cls(pcm=pcm + bytes(pad * 2), duration_ms=duration_ms)


ServiceResponse = Union[str, SceneTone, AudioClip]


@dataclass(frozen=True, slots=True)
class VoiceParams:
    voice: str
    style: str
    rate: float = 1.0


# Tone to provider voice/style table. Swapping TTS vendors means editing this
# table (or the config file section that overrides it), not code.
DEFAULT_TONE_VOICES: Mapping[SceneTone, VoiceParams] = {
    SceneTone.NEUTRAL: VoiceParams("narrator-a", "calm"),
    SceneTone.CHEERFUL: VoiceParams("narrator-a", "cheerful"),
    SceneTone.SAD: VoiceParams("narrator-a", "sad"),
    SceneTone.FEARFUL: VoiceParams("narrator-a", "whispering"),
    SceneTone.URGENT: VoiceParams("narrator-b", "shouting", rate=1.15),
}

# Prompts are original to this engine; the upstream description style they
# aim for is short, concrete, and free of speculation.
PROMPTS: Mapping[ServiceKind, str] = {
    ServiceKind.OCR: "Transcribe all legible text in this image. Reply with the text only.",
    ServiceKind.ICON_DESCRIBE: (
        "Describe this interface icon for a blind user in one short clause: "
        "shape, colors, and any symbol. No speculation about function."
    ),
    ServiceKind.SCENE_DESCRIBE: (
        "Summarize this virtual scene for a blind user in at most two "
        "sentences. Ground the summary in the detected objects listed after "
        "the image. Detected objects: {context}"
    ),
    ServiceKind.TONE_CLASSIFY: (
        "Classify the emotional mood of this scene. Reply with exactly one "
        "of: neutral, cheerful, sad, fearful, urgent."
    ),
}


def truncate_description(text: str, limit: int = DESCRIPTION_CHAR_LIMIT) -> str:
    """Cap a description, preferring to cut at the last full sentence."""
    if len(text) <= limit:
        return text
    cut = text[:limit]
    end = max(cut.rfind("."), cut.rfind("!"), cut.rfind("?"))
    if end > 0:
        return cut[: end + 1].rstrip()
    space = cut.rfind(" ")
    if space > 0:
        return cut[:space].rstrip()
    return cut


@runtime_checkable
class ServiceBackend(Protocol):
    def call(self, request: ServiceRequest) -> ServiceResponse: ...


# Scene names a fixture run can map to tones without registering per-frame
# records.
DEFAULT_SCENE_TONES: Mapping[str, SceneTone] = {
    "lounge": SceneTone.NEUTRAL,
    "halloween-town": SceneTone.FEARFUL,
}


class FixtureServices:
    """Deterministic backend answering from registered records.

    Unregistered requests fall back to kind defaults: OCR and description
    return empty text, tone classification maps the payload's context string
    through ``tone_map``, and synthesis emits silence lasting
    ``60 ms x word count``.
    """

    def __init__(
        self,
        *,
        tone_map: Mapping[str, SceneTone] | None = None,
        latency_s: float = 0.0,
    ) -> None:
        self._responses: dict[str, ServiceResponse] = {}
        self.tone_map = dict(DEFAULT_SCENE_TONES if tone_map is None else tone_map)
        self.latency_s = latency_s
        self._fail_next: dict[ServiceKind, int] = {}
        self._lock = threading.Lock()
        self.calls: list[ServiceRequest] = []

    def register(self, request: ServiceRequest, response: ServiceResponse) -> None:
        with self._lock:
            self._responses[request_key(request)] = response

    def fail_next(self, kind: ServiceKind, count: int = 1) -> None:
        """Make the next ``count`` calls of this kind raise ServiceFailure."""
        with self._lock:
            self._fail_next[kind] = self._fail_next.get(kind, 0) + count

    def call(self, request: ServiceRequest) -> ServiceResponse:
        with self._lock:
            self.calls.append(request)
            pending = self._fail_next.get(request.kind, 0)
            if pending > 0:
                self._fail_next[request.kind] = pending - 1
                raise ServiceFailure(f"fixture forced failure for {request.kind.value}")
            hit = self._responses.get(request_key(request))
        if self.latency_s > 0.0:
            time.sleep(self.latency_s)
        if hit is not None:
            return hit
        if request.kind is ServiceKind.SYNTHESIZE:
            text = request.payload.decode("utf-8")
            return AudioClip.silence(FIXTURE_MS_PER_WORD * len(text.split()))
        if request.kind is ServiceKind.TONE_CLASSIFY:
            hint = payload_context(request.payload)
            return self.tone_map.get(hint, DEFAULT_TONE)
        return ""

    @classmethod
    def from_dir(cls, root: str | Path, **kwargs: object) -> FixtureServices:
        """Load ``<kind>/<request-key>.txt`` and ``Synthesize/<key>.wav`` records."""
        backend = cls(**kwargs)  # type: ignore[arg-type]
        root = Path(root)
        for kind in ServiceKind:
            kind_dir = root / kind.value
            if not kind_dir.is_dir():
                continue
            for path in sorted(kind_dir.iterdir()):
                key = path.stem
                if path.suffix == ".txt":
                    text = path.read_text(encoding="utf-8").rstrip("\n")
                    if kind is ServiceKind.TONE_CLASSIFY:
                        backend._responses[key] = SceneTone(text.strip().lower())
                    else:
                        backend._responses[key] = text
                elif path.suffix == ".wav":
                    backend._responses[key] = _read_wav_clip(path)
        return backend


def _read_wav_clip(path: Path) -> AudioClip:
    with wave.open(str(path), "rb") as wav:
        if wav.getnchannels() != 1 or wav.getsampwidth() != 2:
            raise ValueError(f"{path}: clips must be 16-bit mono")
        if wav.getframerate() != SAMPLE_RATE_HZ:
            raise ValueError(f"{path}: clips must be {SAMPLE_RATE_HZ} Hz")
        pcm = wav.readframes(wav.getnframes())
    return AudioClip.from_pcm(pcm)


def write_wav_clip(path: str | Path, clip: AudioClip) -> None:
    with wave.open(str(path), "wb") as wav:
        wav.setnchannels(1)
        wav.setsampwidth(2)
        wav.setframerate(SAMPLE_RATE_HZ)
        wav.writeframes(clip.pcm)


@dataclass(frozen=True, slots=True)
class ProviderConfig:
    """Hosted-provider wiring; the API key is read from the environment."""

    endpoint: str
    api_key_env: str = "SCENEREADER_API_KEY"
    model: str = "default"
    timeout_s: float = DEFAULT_TIMEOUT_S
    voices: Mapping[SceneTone, VoiceParams] = field(
        default_factory=lambda: dict(DEFAULT_TONE_VOICES)
    )


class HttpServices:
    """JSON-over-HTTP bridge to a hosted OCR/LLM/TTS provider.

    Request body: ``{"kind", "model", "prompt", "payload" (base64), "tone",
    "voice", "style", "rate"}``.  Text kinds answer ``{"text": ...}``;
    synthesis answers ``{"pcm": base64 16-bit mono 48 kHz}``.
    """

    def __init__(self, config: ProviderConfig) -> None:
        import os

        self._config = config
        self._api_key = os.environ.get(config.api_key_env, "")

    def call(self, request: ServiceRequest) -> ServiceResponse:
        cfg = self._config
        body: dict[str, object] = {
            "kind": request.kind.value,
            "model": cfg.model,
            "prompt": PROMPTS.get(request.kind, ""),
            "payload": base64.b64encode(request.payload).decode("ascii"),
        }
        if request.tone is not None:
            voice = cfg.voices.get(request.tone, DEFAULT_TONE_VOICES[SceneTone.NEUTRAL])
            body["tone"] = request.tone.value
            body["voice"] = voice.voice
            body["style"] = voice.style
            body["rate"] = voice.rate
        data = json.dumps(body).encode("utf-8")
        headers = {"Content-Type": "application/json"}
        if self._api_key:
            headers["Authorization"] = f"Bearer {self._api_key}"
        req = urllib.request.Request(cfg.endpoint, data=data, headers=headers)
        try:
            with urllib.request.urlopen(req, timeout=cfg.timeout_s) as resp:
                reply = json.load(resp)
        except (OSError, ValueError) as exc:
            raise ServiceFailure(f"{request.kind.value} transport error: {exc}") from exc
        return self._parse(request.kind, reply)

    @staticmethod
    def _parse(kind: ServiceKind, reply: object) -> ServiceResponse:
        if not isinstance(reply, dict):
            raise ServiceFailure(f"{kind.value}: malformed provider reply")
        if kind is ServiceKind.SYNTHESIZE:
            pcm_b64 = reply.get("pcm")
            if not isinstance(pcm_b64, str):
                raise ServiceFailure("Synthesize reply missing pcm")
            try:
                return AudioClip.from_pcm(base64.b64decode(pcm_b64))
            except (ValueError, TypeError) as exc:
                raise ServiceFailure(f"Synthesize reply invalid: {exc}") from exc
        text = reply.get("text")
        if not isinstance(text, str):
            raise ServiceFailure(f"{kind.value} reply missing text")
        if kind is ServiceKind.TONE_CLASSIFY:
            try:
                return SceneTone(text.strip().lower())
            except ValueError as exc:
                raise ServiceFailure(f"unknown tone {text!r}") from exc
        return text


class ServiceClient:
    """Cache, timeout, retry, and budget policy around a backend.

    Thread-safe; concurrent calls are allowed up to whatever pool bound the
    caller enforces.
    """

    def __init__(
        self,
        backend: ServiceBackend,
        *,
        timeout_s: float = DEFAULT_TIMEOUT_S,
        clock: Callable[[], float] = time.monotonic,
        cache_ttl_s: Mapping[ServiceKind, float] = CACHE_TTL_S,
    ) -> None:
        self._backend = backend
        self._timeout_s = timeout_s
        self._clock = clock
        self._ttl = dict(cache_ttl_s)
        self._cache: dict[str, tuple[float, ServiceResponse]] = {}
        self._lock = threading.Lock()

    # -- public operations ------------------------------------------------

    def ocr(self, crop: np.ndarray) -> str:
        request = ServiceRequest(ServiceKind.OCR, image_payload(crop))
        return self._expect_text(self.cached(request))

    def classify_tone(self, frame: Frame, scene_hint: str = "") -> SceneTone:
        request = ServiceRequest(
            ServiceKind.TONE_CLASSIFY, image_payload(frame.pixels, scene_hint)
        )
        response = self.cached(request)
        if not isinstance(response, SceneTone):
            raise ServiceFailure("tone classifier returned a non-tone response")
        return response

    def describe(self, kind: ServiceKind, image: np.ndarray, context: str = "") -> str:
        if kind not in _DESCRIBE_KINDS:
            raise ValueError(f"describe does not accept kind {kind.value}")
        request = ServiceRequest(kind, image_payload(image, context))
        return truncate_description(self._expect_text(self.cached(request)))

    def synthesize(self, text: str, tone: SceneTone) -> AudioClip:
        if not text.strip():
            raise ValueError("synthesize requires non-empty text")
        request = ServiceRequest(
            ServiceKind.SYNTHESIZE, text.encode("utf-8"), tone=tone
        )
        response = self.cached(request)
        if not isinstance(response, AudioClip):
            raise ServiceFailure("synthesizer returned a non-audio response")
        return response

    def cached(self, request: ServiceRequest) -> ServiceResponse:
        key = request_key(request)
        now = self._clock()
        with self._lock:
            entry = self._cache.get(key)
            if entry is not None and entry[0] > now:
                return entry[1]
        response = self._fetch(request)
        expires = self._clock() + self._ttl[request.kind]
        with self._lock:
            self._cache[key] = (expires, response)
        return response

    # -- internals ---------------------------------------------------------

    @staticmethod
    def _expect_text(response: ServiceResponse) -> str:
        if not isinstance(response, str):
            raise ServiceFailure("service returned a non-text response")
        return response

    def _fetch(self, request: ServiceRequest) -> ServiceResponse:
        # OCR is idempotent and cheap, so it gets one retry; LLM retries
        # would blow the interaction latency budget.
        attempts = 2 if request.kind is ServiceKind.OCR else 1
        last: ServiceFailure | None = None
        for _ in range(attempts):
            try:
                return self._timed_call(request)
            except ServiceFailure as exc:
                last = exc
        assert last is not None
        raise last

    def _timed_call(self, request: ServiceRequest) -> ServiceResponse:
        start = time.perf_counter()
        try:
            response = self._backend.call(request)
        except ServiceFailure:
            raise
        except (OSError, ValueError) as exc:
            raise ServiceFailure(f"{request.kind.value} failed: {exc}") from exc
        elapsed = time.perf_counter() - start
        if elapsed > self._timeout_s:
            raise ServiceFailure(
                f"{request.kind.value} took {elapsed:.2f}s, over the "
                f"{self._timeout_s:.0f}s timeout"
            )
        self._check_budget(request.kind, elapsed)
        return response

    @staticmethod
    def _check_budget(kind: ServiceKind, elapsed: float) -> None:
        if kind is ServiceKind.OCR and elapsed > OCR_BASELINE_S * _ALARM_FACTOR:
            log.warning("ocr over budget: %.2fs (baseline %.2fs)", elapsed, OCR_BASELINE_S)
        elif kind in _DESCRIBE_KINDS and elapsed > DESCRIBE_BASELINE_S * _ALARM_FACTOR:
            log.warning(
                "describe over budget: %.2fs (baseline %.2fs)", elapsed, DESCRIBE_BASELINE_S
            )
